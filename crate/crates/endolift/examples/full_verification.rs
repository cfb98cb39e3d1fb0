//! Run the complete verification plan on the default grid (d in {3, 4},
//! n up to 2, truncation level 3) and print a summary. Equivalent to
//! `endolift verify --lemma all`.
//!
//! Run with: cargo run --release --example full_verification

use endolift::config::Config;
use endolift::verify::{plan_checks, LemmaTag};

fn main() -> endolift::Result<()> {
    let cfg = Config::default().with_env_seed();
    cfg.validate()?;
    println!("config hash {}", cfg.hash());
    let jobs = plan_checks(LemmaTag::All, &cfg);
    let mut reports: Vec<_> = jobs.iter().map(|job| job(&cfg)).collect();
    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    let mut passed = 0;
    for r in &reports {
        println!("{}", r.summary_line());
        if r.pass {
            passed += 1;
        }
    }
    println!("{passed} of {} checks passed", reports.len());
    std::process::exit(if passed == reports.len() { 0 } else { 2 });
}
