//! Theorem checks over parameter ranges, Ramsey lower-bound certificates
//! and sweep reports. Every number in a certificate carries its provenance
//! and every check can be re-run from the stored evidence.

mod certificate;
mod suites;
mod sweep;

pub use certificate::{
    Certificate, Check, Claim, Evidence, Provenance, RamseyRecord, Status, Value, SCHEMA_VERSION,
};
pub use suites::{
    ramsey_certificate, recheck_ramsey, verify_circle_lemma, verify_code_graphs, verify_degree_formula,
    verify_girth_diameter, verify_main_theorem, verify_mt1, CIRCLE_MAX_Q,
};
pub use sweep::{
    run_sweep, sweep, write_summary, FamilyKind, Residue, SummaryRow, SweepConfig, SweepEntry,
    SweepReport, SUMMARY_COLUMNS, SUMMARY_FILE,
};
