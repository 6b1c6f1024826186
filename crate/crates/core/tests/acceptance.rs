//! Runs every acceptance criterion and prints one line per criterion.

use qtorus::verify::{run_all, VerifyConfig};

#[test]
fn acceptance_criteria() {
    let results = run_all(&VerifyConfig::default());
    for r in &results {
        println!("{}", r.line());
    }
    let failed: Vec<u32> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
