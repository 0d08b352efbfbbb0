//! Problem files, runs and reports for the command-line front end.

mod problem;
mod report;

pub use problem::ProblemFile;
pub use report::{
    grouped_display, run_char0, run_charq, CertificateReport, ClosureReport, Mode, PrimeReport, Report,
};
