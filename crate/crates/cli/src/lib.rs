//! Command-line front end: JSON algebra documents, checks and constructions.

pub mod document;
mod render;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use bihom_core::algebra::{
    minus_algebra, plus_algebra, twist, untwist_star, BiHomAlgebra, LinearEndo, Preconditions,
};
use bihom_core::catalog;
use bihom_core::discovery::{search_morphism_pairs, SearchSpace};
use bihom_core::identities::{check_admissibility, check_identity, identity, run_suite, Admissibility, Profile};
use bihom_core::report::IdentityReport;
use bihom_core::scalar::{parse_scalar, Rational, Ring};
use clap::{Parser, Subcommand};

use document::{emit_document, parse_document, AlgebraDocument, Loaded};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "bihom", version, about = "Exact checks for algebras with two structure maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a document, printing the structure-map facts.
    Validate { file: PathBuf },
    /// Check one identity and/or a profile.
    Check {
        file: PathBuf,
        #[arg(long)]
        identity: Option<String>,
        #[arg(long)]
        profile: Option<Profile>,
        #[arg(long)]
        json: bool,
    },
    /// Twisted algebra with product μ(αx, βy).
    Twist {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the morphism and commutation checks.
        #[arg(long)]
        force: bool,
    },
    /// Commutator algebra A⁻.
    Minus {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Plus algebra A⁺.
    Plus {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Untwisted plain algebra with product μ(α⁻¹x, β⁻¹y).
    Star {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the alternativity check.
        #[arg(long)]
        force: bool,
    },
    /// Full registry, facts and admissibility.
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Commuting morphism pairs with entries from a finite pool.
    SearchMorphisms {
        file: PathBuf,
        /// Comma-separated rationals, e.g. `-1,0,1/2,1`.
        #[arg(long, allow_hyphen_values = true)]
        pool: String,
        /// JSON n×n array of 0/1; zero pins the entry to zero.
        #[arg(long)]
        mask: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Emit {
        key: String,
        /// Parameter assignment `name=value`; repeatable.
        #[arg(long = "set", value_name = "NAME=VALUE")]
        set: Vec<String>,
    },
}

/// Diagnostic for exit code 2.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one command, writing to the given streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let line = msg.lines().next().unwrap_or("error").to_string();
            let _ = writeln!(err, "error: {line}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file, out),
        Command::Check {
            file,
            identity,
            profile,
            json,
        } => check(&file, identity.as_deref(), profile, json, out),
        Command::Twist { file, out: dest, force } => {
            let doc = load(&file)?;
            let (a, b) = doc.maps.clone().ok_or_else(|| Failure("twist needs alpha and beta".into()))?;
            let pre = if force { Preconditions::Force } else { Preconditions::Verify };
            let t = twist(&doc.algebra, &a, &b, pre)?;
            write_doc(&from_bihom(&format!("{}_twist", doc.name), &t, &doc), dest.as_deref(), out)
        }
        Command::Minus { file, out: dest } => {
            let doc = load(&file)?;
            let m = minus_algebra(&doc.bihom()?)?;
            write_doc(&from_bihom(&format!("{}_minus", doc.name), &m, &doc), dest.as_deref(), out)
        }
        Command::Plus { file, out: dest } => {
            let doc = load(&file)?;
            let p = plus_algebra(&doc.bihom()?)?;
            write_doc(&from_bihom(&format!("{}_plus", doc.name), &p, &doc), dest.as_deref(), out)
        }
        Command::Star { file, out: dest, force } => star(&file, dest.as_deref(), force, out),
        Command::Report { file, json } => report(&file, json, out),
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let width = catalog::keys().iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, d) in catalog::keys() {
                    writeln!(out, "{k:<width$}  {d}")?;
                }
                Ok(EXIT_OK)
            }
            CatalogAction::Emit { key, set } => {
                let mut entry = catalog::get_entry(&key)?;
                if !set.is_empty() {
                    let values = parse_assignments(&set)?;
                    entry = catalog::CatalogEntry {
                        key: entry.key.clone(),
                        ..catalog::instantiate(&entry, &values)?
                    };
                }
                write!(out, "{}", emit_document(&AlgebraDocument::from_entry(&entry)))?;
                Ok(EXIT_OK)
            }
        },
        Command::SearchMorphisms {
            file,
            pool,
            mask,
            limit,
            json,
        } => search(&file, &pool, mask.as_deref(), limit, json, out),
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let bytes = read_input(path)?;
    let doc = parse_document(&bytes).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    doc.load().map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn from_bihom(name: &str, b: &BiHomAlgebra, doc: &Loaded) -> AlgebraDocument {
    AlgebraDocument::from_bihom(name, b, &doc.constraints, &doc.inequations)
}

fn write_doc(doc: &AlgebraDocument, dest: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let text = emit_document(doc);
    match dest {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure(format!("{}: {e}", p.display())))?,
        None => write!(out, "{text}")?,
    }
    Ok(EXIT_OK)
}

fn exit_for(reports: &[IdentityReport]) -> i32 {
    if reports.iter().any(|r| r.verdict.is_failure()) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn validate(file: &Path, out: &mut dyn Write) -> Outcome {
    let doc = load(file)?;
    let b = doc.bihom()?;
    let f = b.facts();
    writeln!(out, "{}: dimension {}, variables [{}]", doc.name, b.dim(), b.ring().vars().join(", "))?;
    let yes = |v: bool| if v { "yes" } else { "no" };
    writeln!(out, "  maps commute          {}", yes(f.maps_commute))?;
    writeln!(out, "  alpha multiplicative  {}", yes(f.alpha_multiplicative))?;
    writeln!(out, "  beta multiplicative   {}", yes(f.beta_multiplicative))?;
    writeln!(out, "  alpha invertible      {}", yes(f.alpha_invertible))?;
    writeln!(out, "  beta invertible       {}", yes(f.beta_invertible))?;
    Ok(EXIT_OK)
}

fn check(file: &Path, name: Option<&str>, profile: Option<Profile>, json: bool, out: &mut dyn Write) -> Outcome {
    if name.is_none() && profile.is_none() {
        return Err(Failure("check needs --identity or --profile".into()));
    }
    let def = match name {
        Some(n) => Some(identity(n).ok_or_else(|| Failure(format!("unknown identity `{n}`")))?),
        None => None,
    };
    let doc = load(file)?;
    let b = doc.bihom()?;
    let mut reports = Vec::new();
    if let Some(def) = def {
        reports.push(check_identity(&b, def));
    }
    if let Some(p) = profile {
        reports.extend(run_suite(&b, p));
    }
    emit_reports(&reports, b.basis(), json, out)?;
    Ok(exit_for(&reports))
}

fn emit_reports(reports: &[IdentityReport], labels: &[String], json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    if json {
        let v = render::reports_json(reports, labels);
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        write!(out, "{}", render::reports_table(reports, labels))?;
    }
    Ok(())
}

fn star(file: &Path, dest: Option<&Path>, force: bool, out: &mut dyn Write) -> Outcome {
    let doc = load(file)?;
    let b = doc.bihom()?;
    if !force {
        for n in ["left_alternative", "right_alternative"] {
            let r = check_identity(&b, identity(n).expect("registered"));
            if !r.is_holds() {
                return Err(Failure(format!("star needs a BiHom-alternative algebra: {n} is {}", r.verdict)));
            }
        }
    }
    let a = untwist_star(&b)?;
    let doc_out = AlgebraDocument::from_parts(&format!("{}_star", doc.name), &a, None, &doc.constraints, &doc.inequations);
    write_doc(&doc_out, dest, out)
}

fn report(file: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let doc = load(file)?;
    let b = doc.bihom()?;
    let mut reports = run_suite(&b, Profile::Full);
    reports.push(check_admissibility(&b, Admissibility::Malcev));
    reports.push(check_admissibility(&b, Admissibility::Jordan));
    emit_reports(&reports, b.basis(), json, out)?;
    Ok(exit_for(&reports))
}

fn parse_rational(text: &str) -> Result<Rational, Failure> {
    parse_scalar(text.trim(), &Ring::empty())?
        .as_rational()
        .ok_or_else(|| Failure(format!("`{text}` is not a rational number")))
}

fn parse_assignments(items: &[String]) -> Result<Vec<(String, Rational)>, Failure> {
    items
        .iter()
        .map(|s| {
            let (k, v) = s
                .split_once('=')
                .ok_or_else(|| Failure(format!("--set expects NAME=VALUE, got `{s}`")))?;
            Ok((k.trim().to_string(), parse_rational(v)?))
        })
        .collect()
}

fn parse_mask(path: &Path, n: usize) -> Result<Vec<bool>, Failure> {
    let bytes = read_input(path)?;
    let rows: Vec<Vec<u8>> =
        serde_json::from_slice(&bytes).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Failure(format!("{}: mask must be {n}x{n}", path.display())));
    }
    Ok(rows.into_iter().flatten().map(|v| v != 0).collect())
}

fn search(file: &Path, pool: &str, mask: Option<&Path>, limit: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let doc = load(file)?;
    let pool: Vec<Rational> = pool.split(',').map(parse_rational).collect::<Result<_, _>>()?;
    let mask = match mask {
        Some(p) => Some(parse_mask(p, doc.algebra.dim())?),
        None => None,
    };
    let space = SearchSpace::new(doc.algebra.clone(), pool, mask)?;
    let pairs = search_morphism_pairs(&space, limit);
    let rows = |m: &LinearEndo| -> Vec<Vec<String>> {
        let n = m.dim();
        (0..n).map(|i| (0..n).map(|j| m.entry(i, j).to_string()).collect()).collect()
    };
    if json {
        let v: Vec<serde_json::Value> = pairs
            .iter()
            .map(|(a, b)| serde_json::json!({ "alpha": rows(a), "beta": rows(b) }))
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    } else {
        writeln!(out, "{} pair(s)", pairs.len())?;
        for (k, (a, b)) in pairs.iter().enumerate() {
            writeln!(out, "pair {}", k + 1)?;
            writeln!(out, "  alpha {}", render::matrix_inline(&rows(a)))?;
            writeln!(out, "  beta  {}", render::matrix_inline(&rows(b)))?;
        }
    }
    Ok(EXIT_OK)
}
