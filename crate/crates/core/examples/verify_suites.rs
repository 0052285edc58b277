//! Runs every verification suite at its default scope.
//!
//! `cargo run --release --example verify_suites [max-n-3]`

use webfold::oracle::{verify_scoped, Scope, Theorem};

fn main() {
    let three: Option<usize> = std::env::args().nth(1).and_then(|s| s.parse().ok());
    let mut failed = false;
    for t in Theorem::ALL {
        let mut scope = t.default_scope();
        if let Some(k) = three {
            scope = Scope { three_row: k, ..scope };
        }
        let report = verify_scoped(t, scope);
        failed |= !report.passed();
        print!("{report}");
    }
    std::process::exit(i32::from(failed));
}
