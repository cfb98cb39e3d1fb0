//! Command line interface: verification over a (d, nu, n) grid, inspection
//! of constructed modules and module files, the character table, and the
//! golden corpus.
//!
//! Exit codes: 0 all checks pass, 1 usage error, 2 at least one check failed
//! or a corpus diff was found.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use endolift::chars::{char_table, perm_character, regular_character};
use endolift::config::{parse_seed, Config};
use endolift::deform::{n_lambda, Lambda};
use endolift::dihedral::SubgroupId;
use endolift::endotriv::{a_module, e_module, is_endotrivial, xi_invariant, Reflection};
use endolift::error::Error;
use endolift::files::{pretty, read_module};
use endolift::modrep::{stable_hom_dim, GroupKind, ModuleRep};
use endolift::verify::{plan_checks, LemmaTag};

#[derive(Parser)]
#[command(name = "endolift", version, about = "workbench for endo-trivial modules of dihedral 2-groups", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the verification checks and write one report per check
    Verify(VerifyArgs),
    /// Print dimensions and invariants of a constructed module or module file
    Inspect(InspectArgs),
    /// Print the character table
    CharTable(CharTableArgs),
    /// Regenerate or diff the golden corpus
    Golden(GoldenArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// which family of checks to run: 3.1 | 4.2 | 4.3 | 5.2 | 5.3 | 5.4 | thm1.2 | all
    #[arg(long, default_value = "all")]
    lemma: String,
    /// restrict to one group parameter (default: 3 and 4)
    #[arg(long)]
    d: Option<u32>,
    /// restrict to one reflection: sigma | tau
    #[arg(long)]
    nu: Option<String>,
    /// series depth (n runs from 0 to this value)
    #[arg(long)]
    n: Option<usize>,
    /// truncation level for the lifting checks
    #[arg(long)]
    level: Option<u8>,
    #[arg(long)]
    seed: Option<String>,
    /// emit all reports as one JSON array on stdout
    #[arg(long)]
    json: bool,
    /// worker threads for the verification grid (0 = one per core)
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value = "reports")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct InspectArgs {
    /// a | e | k | kd | n-lambda | char-table, or a module file path
    target: String,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// for n-lambda: a unit value (integer) or sigma | tau
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CharTableArgs {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GoldenArgs {
    /// diff against the existing corpus instead of writing it
    #[arg(long)]
    check: bool,
    #[arg(long, default_value = "golden")]
    dir: PathBuf,
    #[arg(long)]
    seed: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help and version requests are not usage errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Error::InvalidArgument(msg)) | Err(Error::BadGroup(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_nu(s: Option<&str>) -> endolift::Result<Vec<Reflection>> {
    match s {
        None => Ok(vec![Reflection::Sigma, Reflection::Tau]),
        Some(v) => Ok(vec![Reflection::parse(v)?]),
    }
}

fn run(cli: Cli) -> endolift::Result<ExitCode> {
    match cli.cmd {
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Inspect(args) => cmd_inspect(args),
        Cmd::CharTable(args) => cmd_char_table(args.d, args.json),
        Cmd::Golden(args) => cmd_golden(args),
    }
}

fn cmd_verify(args: VerifyArgs) -> endolift::Result<ExitCode> {
    let tag = LemmaTag::parse(&args.lemma)?;
    let mut cfg = Config::default();
    if let Some(d) = args.d {
        cfg.d_values = vec![d];
    }
    cfg.nu_values = parse_nu(args.nu.as_deref())?;
    if let Some(n) = args.n {
        cfg.n_max = n;
    }
    if let Some(level) = args.level {
        cfg.level = level;
    }
    if let Some(seed) = &args.seed {
        cfg.seed = parse_seed(seed)?;
    }
    cfg.out_dir = args.out_dir.clone();
    let cfg = cfg.with_env_seed();
    cfg.validate()?;

    let jobs = plan_checks(tag, &cfg);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let mut reports: Vec<_> = pool.install(|| {
        use rayon::prelude::*;
        jobs.par_iter().map(|job| job(&cfg)).collect()
    });
    reports.sort_by(|a, b| a.check_id.cmp(&b.check_id));

    std::fs::create_dir_all(&cfg.out_dir)?;
    for r in &reports {
        std::fs::write(cfg.out_dir.join(r.file_name()), pretty(&r.to_json()))?;
    }
    let all_pass = reports.iter().all(|r| r.pass);
    if args.json {
        let arr: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
        println!("{}", pretty(&json!(arr)));
    } else {
        for r in &reports {
            println!("{}", r.summary_line());
        }
        println!(
            "{} of {} checks passed; reports in {}",
            reports.iter().filter(|r| r.pass).count(),
            reports.len(),
            cfg.out_dir.display()
        );
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn module_properties(m: &ModuleRep, iso: &endolift::modrep::IsoConfig) -> serde_json::Value {
    let g = m.group().expect("dihedral modules only");
    let free_rank = m.free_rank();
    let stable_end = stable_hom_dim(m, m);
    let endo = is_endotrivial(m);
    let xi = if endo {
        xi_invariant(m, iso).ok().map(|x| vec![x.a1, x.a2])
    } else {
        None
    };
    let shape = |id: SubgroupId| {
        let s = endolift::endotriv::c2_shape(&m.restrict(&g.subgroup(id)));
        json!({"trivial": s.trivial, "free": s.free})
    };
    json!({
        "d": g.d,
        "dim": m.dim(),
        "field_degree": m.m(),
        "free_rank": free_rank,
        "stable_end_dim": stable_end,
        "endotrivial": endo,
        "xi": xi,
        "res_C_sigma": shape(SubgroupId::CSigma),
        "res_C_tau": shape(SubgroupId::CTau),
    })
}

fn cmd_inspect(args: InspectArgs) -> endolift::Result<ExitCode> {
    let iso = Config::default().with_env_seed().iso();
    let need_d = || {
        args.d
            .ok_or_else(|| Error::InvalidArgument("--d is required for this target".into()))
    };
    let need_nu = || -> endolift::Result<Reflection> {
        Reflection::parse(
            args.nu
                .as_deref()
                .ok_or_else(|| Error::InvalidArgument("--nu is required for this target".into()))?,
        )
    };
    let value = match args.target.as_str() {
        "a" | "A" => {
            let g = endolift::dihedral::make_group(need_d()?)?;
            let h = a_module(g, need_nu()?, args.n.unwrap_or(1), 1, &iso)?;
            let mut v = module_properties(&h.module, &iso);
            v["certificate"] = h.certificate_json();
            v
        }
        "e" | "E" => {
            let g = endolift::dihedral::make_group(need_d()?)?;
            let m = e_module(g, need_nu()?, 1);
            module_properties(&m, &iso)
        }
        "k" => {
            let g = endolift::dihedral::make_group(need_d()?)?;
            module_properties(&ModuleRep::trivial(GroupKind::Dihedral(g), 1), &iso)
        }
        "kd" | "kD" | "regular" => {
            let g = endolift::dihedral::make_group(need_d()?)?;
            module_properties(&ModuleRep::regular(GroupKind::Dihedral(g), 1), &iso)
        }
        "n-lambda" => {
            let g = endolift::dihedral::make_group(need_d()?)?;
            let lam = match args.lambda.as_deref() {
                Some("sigma") => Lambda::Refl(Reflection::Sigma),
                Some("tau") => Lambda::Refl(Reflection::Tau),
                Some(v) => Lambda::Unit(v.parse::<u8>().map_err(|_| {
                    Error::InvalidArgument(format!("cannot parse lambda value {v}"))
                })?),
                None => return Err(Error::InvalidArgument("--lambda is required".into())),
            };
            module_properties(&n_lambda(g, lam, 1)?, &iso)
        }
        "char-table" => return cmd_char_table(need_d()?, args.json),
        path => {
            let m = read_module(std::path::Path::new(path))?;
            module_properties(&m, &iso)
        }
    };
    if args.json {
        println!("{}", pretty(&value));
    } else {
        println!(
            "dim {}  free_rank {}  stable_end {}",
            value["dim"], value["free_rank"], value["stable_end_dim"]
        );
        println!("endotrivial: {}", value["endotrivial"]);
        if !value["xi"].is_null() {
            println!("xi: {}", value["xi"]);
        }
        println!("res C_sigma: {}", value["res_C_sigma"]);
        println!("res C_tau:   {}", value["res_C_tau"]);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_char_table(d: u32, as_json: bool) -> endolift::Result<ExitCode> {
    let g = endolift::dihedral::make_group(d)?;
    let t = char_table(g);
    let classes: Vec<_> = t
        .classes
        .iter()
        .map(|c| json!({"rep": {"j": c.rep.j, "s": c.rep.s}, "size": c.size}))
        .collect();
    let rows: Vec<_> = t
        .labels
        .iter()
        .zip(&t.irreducibles)
        .map(|(label, cf)| {
            let values: Vec<_> = cf
                .values
                .iter()
                .map(|v| match v.rational_value() {
                    Some(r) => json!(r),
                    None => json!(v.coeffs()),
                })
                .collect();
            json!({"label": label, "values": values})
        })
        .collect();
    let mut rational = Vec::new();
    for l in 0..=(d as usize - 3) {
        let rho = t.rho(l)?;
        rational.push(json!({"label": format!("rho_{l}"), "values": rho.rational_values()?}));
    }
    let perm_sigma = perm_character(&t, SubgroupId::CSigma)?;
    let perm_tau = perm_character(&t, SubgroupId::CTau)?;
    let reg = regular_character(&t)?;
    let out = json!({
        "d": d,
        "classes": classes,
        "irreducibles": rows,
        "rational_characters": rational,
        "decompositions": {
            "perm_C_sigma": perm_sigma.mult,
            "perm_C_tau": perm_tau.mult,
            "regular": reg.mult,
        },
    });
    if as_json {
        println!("{}", pretty(&out));
    } else {
        println!("character table for d = {d} ({} classes)", t.classes.len());
        print!("{:>10}", "class:");
        for c in &t.classes {
            print!("{:>12}", format!("(j{},s{})x{}", c.rep.j, c.rep.s, c.size));
        }
        println!();
        for row in &rows {
            print!("{:>10}", row["label"].as_str().unwrap());
            for v in row["values"].as_array().unwrap() {
                print!("{:>12}", v.to_string());
            }
            println!();
        }
        for row in &rational {
            print!("{:>10}", row["label"].as_str().unwrap());
            for v in row["values"].as_array().unwrap() {
                print!("{:>12}", v.to_string());
            }
            println!();
        }
        println!("perm(C_sigma) = {:?}", perm_sigma.mult);
        println!("perm(C_tau)   = {:?}", perm_tau.mult);
        println!("regular       = {:?}", reg.mult);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_golden(args: GoldenArgs) -> endolift::Result<ExitCode> {
    let mut cfg = Config::default();
    if let Some(seed) = &args.seed {
        cfg.seed = parse_seed(seed)?;
    }
    let cfg = cfg.with_env_seed();
    cfg.validate()?;
    if args.check {
        let bad = endolift::golden::check_corpus(&cfg, &args.dir)?;
        if bad.is_empty() {
            println!("golden corpus is clean");
            Ok(ExitCode::SUCCESS)
        } else {
            for b in &bad {
                println!("DIFF {b}");
            }
            Ok(ExitCode::from(2))
        }
    } else {
        let n = endolift::golden::write_corpus(&cfg, &args.dir)?;
        println!("wrote {n} files under {}", args.dir.display());
        Ok(ExitCode::SUCCESS)
    }
}
