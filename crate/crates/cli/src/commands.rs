use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use sriso_core::files::{BundleFile, IdealFile, MapFile, StructureFile};
use sriso_core::generate::generate_bundle;
use sriso_core::ring_map::{check_inverse_pair, constant_term_check, lemma1_check, lemma2_check, pair_well_defined};
use sriso_core::{extract_isomorphism, GenParams, Report, RingKind, Stage, Structure};

use super::Command;

/// Result of a command that ran to completion.
pub enum Outcome {
    Success,
    Negative,
}

impl From<Outcome> for ExitCode {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Success => ExitCode::SUCCESS,
            Outcome::Negative => ExitCode::from(1),
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json value"));
}

fn load_structure(path: &Path) -> Result<Structure> {
    let file: StructureFile = read_json(path)?;
    file.load().with_context(|| format!("validating {}", path.display()))
}

fn warn_isolated(s: &Structure, kind: RingKind) {
    if let (Structure::Graph(g), RingKind::Edge) = (s, kind) {
        let iso = g.isolated_vertices();
        if !iso.is_empty() {
            let names: Vec<&str> = iso.iter().map(|&i| g.vertices()[i].as_str()).collect();
            eprintln!("warning: isolated vertices {} contribute no generators to the edge ideal", names.join(", "));
        }
    }
}

pub fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Ideal { file, kind, out, common } => {
            let s = load_structure(&file)?;
            warn_isolated(&s, kind);
            let ideal = s.ideal(kind).with_context(|| format!("computing the {kind} ideal"))?;
            let f = IdealFile::from_ideal(s.vertices(), &ideal);
            if let Some(out) = &out {
                write_json(out, &f)?;
            }
            if common.json {
                print_json(&json!({"kind": kind, "count": f.generators.len(), "generators": f.generators}));
            } else {
                println!("{} generators", f.generators.len());
                for g in &f.generators {
                    println!("  {g}");
                }
            }
            Ok(Outcome::Success)
        }
        Command::Reconstruct { file, kind, out, common } => {
            let f: IdealFile = read_json(&file)?;
            let ideal = f.ideal().with_context(|| format!("validating {}", file.display()))?;
            let s = Structure::reconstruct(kind, &ideal, f.variables.clone())
                .with_context(|| format!("reconstructing from the {kind} ideal"))?;
            let sf = StructureFile::from(&s);
            if let Some(out) = &out {
                write_json(out, &sf)?;
            }
            if common.json {
                print_json(&serde_json::to_value(&sf)?);
            } else {
                let sets: Vec<String> = match &sf {
                    StructureFile::Complex(c) => c.facets.iter().map(|f| format!("{{{}}}", f.join(","))).collect(),
                    StructureFile::Graph(g) => g.edges.iter().map(|e| format!("{{{}}}", e.join(","))).collect(),
                };
                let what = if matches!(sf, StructureFile::Graph(_)) { "edges" } else { "facets" };
                println!("{} {what}: {}", sets.len(), sets.join(" "));
            }
            Ok(Outcome::Success)
        }
        Command::CheckMap { file, field, common } => {
            let mf: MapFile = read_json(&file)?;
            let pair = mf.to_pair(field).with_context(|| format!("loading {}", file.display()))?;
            let wd = pair_well_defined(&pair);
            let mut reports = vec![wd.clone()];
            if wd.passed() {
                reports.push(check_inverse_pair(&pair));
            }
            reports.extend([lemma1_check(&pair), constant_term_check(&pair), lemma2_check(&pair)]);
            let ok = reports.iter().all(Report::passed);
            if common.json {
                print_json(&json!({"passed": ok, "reports": reports}));
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            Ok(if ok { Outcome::Success } else { Outcome::Negative })
        }
        Command::Extract { file, kind, field, out, common } => {
            let mf: MapFile = read_json(&file)?;
            let pair = mf.to_pair(field).with_context(|| format!("loading {}", file.display()))?;
            match extract_isomorphism(&pair, kind) {
                Ok(r) => {
                    warn_isolated(&r.source, kind);
                    let j = r.to_json();
                    if let Some(out) = &out {
                        write_json(out, &j)?;
                    }
                    if common.json {
                        print_json(&j);
                    } else {
                        for rep in &r.reports {
                            println!("{rep}");
                        }
                        println!("verified bijection:");
                        for (a, b) in r.named_bijection() {
                            println!("  {a} -> {b}");
                        }
                    }
                    for d in &r.diagnostics {
                        eprintln!("note: {d}");
                    }
                    Ok(Outcome::Success)
                }
                Err(fail) => {
                    let j = fail.to_json();
                    if let Some(out) = &out {
                        write_json(out, &j)?;
                    }
                    if common.json {
                        print_json(&j);
                    } else {
                        for rep in &fail.reports {
                            println!("{rep}");
                        }
                    }
                    eprintln!("extraction failed at stage {}", fail.stage);
                    if fail.stage == Stage::Verify {
                        eprintln!(
                            "a pair passing every check should always verify; the input or the implementation is wrong"
                        );
                    }
                    Ok(Outcome::Negative)
                }
            }
        }
        Command::Gen { n, kind, ops, seed, field, density, out, map_out, common } => {
            let params = GenParams { n, kind, ops, seed, field, density };
            let bundle = generate_bundle(&params).context("generating the instance")?;
            warn_isolated(&bundle.source, kind);
            let bf = BundleFile::from(&bundle);
            write_json(&out, &bf)?;
            if let Some(m) = &map_out {
                write_json(m, &bf.map)?;
            }
            if common.json {
                print_json(&json!({"out": out, "n": n, "kind": kind, "seed": seed, "ops": bf.trace.len()}));
            } else {
                println!("wrote {} ({kind}, n = {n}, {} ops, seed {seed})", out.display(), bf.trace.len());
            }
            Ok(Outcome::Success)
        }
        Command::Oracle { first, second, common } => {
            let a = load_structure(&first)?;
            let b = load_structure(&second)?;
            let found = a.brute_force_iso(&b).context("exhaustive search")?;
            let pairs: Option<Vec<(String, String)>> = found.as_ref().map(|psi| {
                (0..psi.len()).map(|i| (a.vertices()[i].clone(), b.vertices()[psi.apply(i)].clone())).collect()
            });
            if common.json {
                let bij = pairs
                    .as_ref()
                    .map(|p| p.iter().map(|(k, v)| (k.clone(), json!(v))).collect::<serde_json::Map<_, _>>());
                print_json(&json!({"isomorphic": found.is_some(), "bijection": bij}));
            } else {
                match &pairs {
                    Some(p) => {
                        for (x, y) in p {
                            println!("{x} -> {y}");
                        }
                    }
                    None => println!("none"),
                }
            }
            Ok(if found.is_some() { Outcome::Success } else { Outcome::Negative })
        }
    }
}
