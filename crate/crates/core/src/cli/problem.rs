use std::fmt::Write;

use crate::error::{Error, Result};
use crate::polycore::{Extension, PrimeField, Rationals, WeightMatrix};

/// A problem file: one `key: value` per line, `#` starts a comment.
///
/// ```text
/// indvars: x
/// depvar: y
/// weights: [[3,2]]
/// relation: y^2 - 3/2*x^3 + 24/7*x^2 - 96/49*x
/// ```
///
/// Weight columns follow the variable order `depvar, indvars...`. An
/// optional `characteristic: q` line selects the default prime for
/// characteristic-q runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub indvars: Vec<String>,
    pub depvar: String,
    pub weights: Vec<Vec<u64>>,
    /// The relation as printed by the ring, so that printing is stable.
    pub relation: String,
    pub characteristic: Option<u64>,
}

const KEYS: [&str; 5] = ["indvars", "depvar", "weights", "relation", "characteristic"];

fn positioned(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values: [Option<(usize, &str)>; 5] = [None; 5];
        let mut offset = 0;
        for (lineno, raw) in text.split_inclusive('\n').enumerate() {
            let start = offset;
            offset += raw.len();
            let line = raw.split('#').next().unwrap_or("").trim_end();
            if line.trim().is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once(':') else {
                return Err(positioned(start, format!("line {}: expected `key: value`", lineno + 1)));
            };
            let key = key.trim();
            let Some(slot) = KEYS.iter().position(|k| *k == key) else {
                return Err(positioned(start, format!("line {}: unknown key {key:?}", lineno + 1)));
            };
            if values[slot].is_some() {
                return Err(positioned(start, format!("line {}: duplicate key {key:?}", lineno + 1)));
            }
            let lead = value.len() - value.trim_start().len();
            values[slot] = Some((start + key.len() + 1 + lead, value.trim()));
        }
        let required = |i: usize| values[i].ok_or_else(|| Error::Input(format!("missing `{}:` line", KEYS[i])));

        let (_, ind) = required(0)?;
        let indvars: Vec<String> = ind.split(',').map(|s| s.trim().to_string()).collect();
        if indvars.iter().any(String::is_empty) {
            return Err(Error::Input("empty independent variable name".into()));
        }
        if indvars.len() != 1 {
            return Err(Error::Unsupported(format!(
                "{} independent variables; only one is supported",
                indvars.len()
            )));
        }
        let (_, depvar) = required(1)?;
        let (wpos, wtext) = required(2)?;
        let weights: Vec<Vec<u64>> = serde_json::from_str(wtext)
            .map_err(|e| positioned(wpos, format!("weights must be a list of integer rows: {e}")))?;
        let (rpos, rtext) = required(3)?;
        let characteristic = match values[4] {
            None => None,
            Some((pos, c)) => match c.parse::<u64>() {
                Ok(0) => None,
                Ok(q) => Some(q),
                Err(_) => return Err(positioned(pos, format!("not a characteristic: {c:?}"))),
            },
        };

        let mut problem = ProblemFile {
            indvars,
            depvar: depvar.to_string(),
            weights,
            relation: rtext.to_string(),
            characteristic,
        };
        let ext = problem.extension().map_err(|e| match e {
            Error::Parse { offset, message } => positioned(rpos + offset, message),
            other => other,
        })?;
        if let Some(q) = characteristic {
            PrimeField::new(q)?;
        }
        problem.relation = ext.ring().display(ext.relation());
        Ok(problem)
    }

    fn weight_matrix(&self) -> Result<WeightMatrix> {
        WeightMatrix::new(self.weights.clone())
    }

    /// The extension over the rationals.
    pub fn extension(&self) -> Result<Extension<Rationals>> {
        let ind: Vec<&str> = self.indvars.iter().map(String::as_str).collect();
        Extension::new(Rationals, &ind, &self.depvar, self.weight_matrix()?, &self.relation)
    }

    /// The extension reduced modulo `q`.
    pub fn extension_mod(&self, q: u64) -> Result<Extension<PrimeField>> {
        self.extension()?.reduce_mod(&PrimeField::new(q)?)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "indvars: {}", self.indvars.join(", "));
        let _ = writeln!(s, "depvar: {}", self.depvar);
        let _ = writeln!(s, "weights: {}", serde_json::to_string(&self.weights).expect("integer rows"));
        let _ = writeln!(s, "relation: {}", self.relation);
        if let Some(q) = self.characteristic {
            let _ = writeln!(s, "characteristic: {q}");
        }
        s
    }
}
