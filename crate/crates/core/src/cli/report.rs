use std::fmt::Write;

use serde::Serialize;

use crate::closure::ClosurePresentation;
use crate::error::Result;
use crate::lifting::{closure_mod_q, run_algorithm1, Algorithm1Outcome, LiftConfig};
use crate::polycore::{Field, Monomial, Poly, Ring};

use super::problem::ProblemFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Char0,
    Charq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub q: u64,
    /// `usable`, or the reason the prime was skipped.
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub delta: String,
    pub numerators: Vec<String>,
    pub variables: Vec<String>,
    pub induced_weights: Vec<Vec<u64>>,
    pub relations: Vec<String>,
    pub psi_y: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub gb_check: bool,
    pub containment_check: bool,
    pub numerator_check: bool,
    pub specialization: Vec<(u64, bool)>,
    pub residuals: Vec<String>,
    pub accepted: bool,
}

/// The result of a run, in the key order used by structured output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub mode: Mode,
    pub characteristic: u64,
    pub conductor: String,
    pub primes: Vec<PrimeReport>,
    pub modulus: Option<String>,
    pub closure: Option<ClosureReport>,
    pub certificate: Option<CertificateReport>,
    pub accepted: bool,
    pub message: Option<String>,
}

/// Print `f` with the terms sharing a dependent part collected, as in
/// `ybar*(x - 8/7)`.
pub fn grouped_display<F: Field>(ring: &Ring<F>, f: &Poly<F>) -> String {
    let ndep = ring.ndep();
    let mut groups: Vec<(Monomial, Vec<(Monomial, F::Elem)>)> = Vec::new();
    for (m, c) in f.terms() {
        let mut dep = m.clone();
        let mut ind = m.clone();
        for v in 0..ring.nvars() {
            if v < ndep {
                ind.set_exp(v, 0);
            } else {
                dep.set_exp(v, 0);
            }
        }
        match groups.iter_mut().find(|(d, _)| *d == dep) {
            Some((_, terms)) => terms.push((ind, c.clone())),
            None => groups.push((dep, vec![(ind, c.clone())])),
        }
    }
    if groups.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (dep, terms) in groups {
        let body = if terms.len() == 1 || dep.is_one() {
            let full: Vec<_> = terms.into_iter().map(|(m, c)| (m.mul(&dep), c)).collect();
            ring.display(&ring.from_terms(full))
        } else {
            format!("{}*({})", ring.format_monomial(&dep), ring.display(&ring.from_terms(terms)))
        };
        match body.strip_prefix('-') {
            Some(rest) if !out.is_empty() => {
                let _ = write!(out, " - {rest}");
            }
            _ if !out.is_empty() => {
                let _ = write!(out, " + {body}");
            }
            _ => out.push_str(&body),
        }
    }
    out
}

fn closure_report<F: Field>(p: &ClosurePresentation<F>) -> ClosureReport {
    let fr = p.fractions();
    let src = fr.ring();
    let rb = p.ring();
    ClosureReport {
        delta: src.display(fr.delta()),
        numerators: fr.numerators().iter().map(|g| src.display(g)).collect(),
        variables: rb.names().to_vec(),
        induced_weights: p.weights().rows().to_vec(),
        relations: p.relations().iter().map(|r| rb.display(r)).collect(),
        psi_y: grouped_display(rb, p.psi_y()),
    }
}

/// Run the multi-modular reconstruction over the rationals.
pub fn run_char0(problem: &ProblemFile, config: &LiftConfig) -> Result<(Report, Vec<String>)> {
    let ext = problem.extension()?;
    let out: Algorithm1Outcome = run_algorithm1(&ext, config)?;
    let src = ext.ring();
    let primes = out
        .runs
        .iter()
        .map(|r| PrimeReport {
            q: r.q,
            status: match &r.outcome {
                Ok(_) => "usable".into(),
                Err(reason) => reason.to_string(),
            },
        })
        .collect();
    let state = out.state.as_ref();
    let closure = out.presentation().map(|p| closure_report(p));
    let certificate = out.certificate.as_ref().map(|c| CertificateReport {
        gb_check: c.gb_check,
        containment_check: c.containment_check,
        numerator_check: c.numerator_check,
        specialization: c.per_prime_specialization.clone(),
        residuals: match out.presentation() {
            Some(p) => c.residuals.iter().map(|r| p.ring().display(r)).collect(),
            None => Vec::new(),
        },
        accepted: c.accepted,
    });
    let accepted = out.accepted();
    let message = if accepted {
        None
    } else if let Some(Err(e)) = state.map(|s| &s.candidate) {
        Some(format!("no candidate accepted; last lift failed: {e}"))
    } else if state.is_none() {
        Some("no candidate accepted: no usable prime".into())
    } else {
        Some("no candidate accepted within the prime budget".into())
    };
    let report = Report {
        mode: Mode::Char0,
        characteristic: 0,
        conductor: src.display(&out.delta0),
        primes,
        modulus: state.map(|s| s.modulus.to_string()),
        closure,
        certificate,
        accepted,
        message,
    };
    Ok((report, out.log))
}

/// Compute the closure modulo a single prime.
pub fn run_charq(problem: &ProblemFile, q: u64, max_iter: usize) -> Result<(Report, Vec<String>)> {
    let ext = problem.extension_mod(q)?;
    let (conductor, presentation) = closure_mod_q(&ext, max_iter)?;
    let r = ext.ring();
    let log = vec![
        format!("prime {q}: conductor {}", r.display(&conductor)),
        format!(
            "prime {q}: denominator {}, {} relations",
            r.display(presentation.fractions().delta()),
            presentation.relations().len()
        ),
    ];
    let report = Report {
        mode: Mode::Charq,
        characteristic: q,
        conductor: r.display(&conductor),
        primes: vec![PrimeReport {
            q,
            status: "usable".into(),
        }],
        modulus: None,
        closure: Some(closure_report(&presentation)),
        certificate: None,
        accepted: true,
        message: None,
    };
    Ok((report, log))
}

fn join_row(row: &[u64]) -> String {
    row.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "mode: {}",
            match self.mode {
                Mode::Char0 => "char0",
                Mode::Charq => "charq",
            }
        );
        if self.mode == Mode::Charq {
            let _ = writeln!(s, "characteristic: {}", self.characteristic);
        }
        let _ = writeln!(s, "conductor: {}", self.conductor);
        for p in &self.primes {
            let _ = writeln!(s, "prime {}: {}", p.q, p.status);
        }
        if let Some(n) = &self.modulus {
            let _ = writeln!(s, "modulus: {n}");
        }
        if let Some(c) = &self.closure {
            let _ = writeln!(s, "delta: {}", c.delta);
            for g in &c.numerators {
                let _ = writeln!(s, "numerator: {g}");
            }
            let _ = writeln!(s, "variables: {}", c.variables.join(", "));
            let rows: Vec<String> = c.induced_weights.iter().map(|r| join_row(r)).collect();
            let _ = writeln!(s, "induced_weights: {}", rows.join("; "));
            if c.relations.is_empty() {
                let _ = writeln!(s, "relations: (none)");
            }
            for r in &c.relations {
                let _ = writeln!(s, "relation: {r}");
            }
            let _ = writeln!(s, "psi(y): {}", c.psi_y);
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(
                s,
                "certificate: gb={} containment={} numerators={}",
                c.gb_check, c.containment_check, c.numerator_check
            );
            let spec: Vec<String> = c.specialization.iter().map(|(q, ok)| format!("{q}={ok}")).collect();
            let _ = writeln!(s, "specialization: {}", spec.join(", "));
            for r in &c.residuals {
                let _ = writeln!(s, "residual: {r}");
            }
        }
        let _ = writeln!(s, "accepted: {}", self.accepted);
        if let Some(m) = &self.message {
            let _ = writeln!(s, "message: {m}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
