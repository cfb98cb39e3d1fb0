//! Golden corpus: canonical module files and reports for the default grid,
//! regenerated deterministically and diffed byte for byte.

use std::collections::BTreeMap;
use std::path::Path;

use crate::config::Config;
use crate::deform::{n_lambda, Lambda};
use crate::endotriv::{a_series, e_module, Reflection};
use crate::error::Result;
use crate::files::{a_handle_to_json, module_to_json, pretty};
use crate::verify::{plan_checks, LemmaTag};

/// The full corpus as path -> content, before touching the filesystem.
pub fn corpus(cfg: &Config) -> Result<BTreeMap<String, String>> {
    let iso = cfg.iso();
    let mut out = BTreeMap::new();
    for &d in &cfg.d_values {
        let g = crate::dihedral::make_group(d)?;
        for nu in [Reflection::Sigma, Reflection::Tau] {
            for h in a_series(g, nu, cfg.n_max, 1, &iso)? {
                let path = format!("modules/a_d{d}_{}_n{}.json", nu.name(), h.n);
                out.insert(path, pretty(&a_handle_to_json(&h)?));
            }
            let e = e_module(g, nu, 1);
            out.insert(
                format!("modules/e_d{d}_{}.json", nu.name()),
                pretty(&module_to_json(&e)?),
            );
        }
        for (name, lam) in [
            ("n_unit1", Lambda::Unit(1)),
            ("n_sigma", Lambda::Refl(Reflection::Sigma)),
            ("n_tau", Lambda::Refl(Reflection::Tau)),
        ] {
            let m = n_lambda(g, lam, 1)?;
            out.insert(format!("modules/{name}_d{d}.json"), pretty(&module_to_json(&m)?));
        }
    }
    for job in plan_checks(LemmaTag::All, cfg) {
        let report = job(cfg);
        out.insert(format!("reports/{}", report.file_name()), pretty(&report.to_json()));
    }
    Ok(out)
}

/// Write the corpus under `dir`.
pub fn write_corpus(cfg: &Config, dir: &Path) -> Result<usize> {
    let files = corpus(cfg)?;
    for (rel, content) in &files {
        let path = dir.join(rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(path, content)?;
    }
    Ok(files.len())
}

/// Regenerate and compare byte-exactly; returns the mismatching paths.
pub fn check_corpus(cfg: &Config, dir: &Path) -> Result<Vec<String>> {
    let files = corpus(cfg)?;
    let mut bad = Vec::new();
    for (rel, content) in &files {
        let path = dir.join(rel);
        match std::fs::read_to_string(&path) {
            Ok(existing) if existing == *content => {}
            Ok(_) => bad.push(format!("{rel}: content differs")),
            Err(_) => bad.push(format!("{rel}: missing")),
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_cfg() -> Config {
        Config { d_values: vec![3], n_max: 0, level: 2, ..Config::default() }
    }

    #[test]
    fn corpus_roundtrip_is_clean() {
        let cfg = tiny_cfg();
        let dir = tempfile::tempdir().unwrap();
        let n = write_corpus(&cfg, dir.path()).unwrap();
        assert!(n > 0);
        let bad = check_corpus(&cfg, dir.path()).unwrap();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn corruption_is_named() {
        let cfg = tiny_cfg();
        let dir = tempfile::tempdir().unwrap();
        write_corpus(&cfg, dir.path()).unwrap();
        let victim = dir.path().join("modules/e_d3_sigma.json");
        let mut text = std::fs::read_to_string(&victim).unwrap();
        text.push('x');
        std::fs::write(&victim, text).unwrap();
        let bad = check_corpus(&cfg, dir.path()).unwrap();
        assert_eq!(bad.len(), 1);
        assert!(bad[0].contains("e_d3_sigma"));
    }
}
