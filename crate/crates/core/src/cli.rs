//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a checked law fails, 2 on
//! structural, parse, I/O or usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::actions::{is_derived_action, is_derived_action_reduced};
use crate::algebra::{is_reduced, validate_gwa};
use crate::enumeration::{
    audit, enumerate_ideals, enumerate_self_actions, AuditOptions, AuditSummary, ProductTest,
};
use crate::error::{Error, Result};
use crate::format::{
    read_json, to_json, write_algebra, write_json, ActionFile, AlgebraFile, ExtensionFile,
    SubsetFile, Workspace,
};
use crate::ideals::{is_ideal, quotient_gwa};
use crate::report::CheckReport;
use crate::semidirect::{canonical_split_extension, roundtrip_check, Mode, SemidirectCandidate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gwa",
    version,
    about = "Check groups with action, their action triples and semi-direct products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an algebra file against the group and action axioms.
    Validate {
        file: PathBuf,
        /// Also check the two reducedness laws.
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check whether a triple is a derived action of ACTOR on TARGET.
    CheckAction {
        actor: PathBuf,
        target: PathBuf,
        triple: PathBuf,
        /// Use the condition list for reduced algebras.
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build the semi-direct product and write it when the triple is
    /// recovered from its canonical split extension.
    Semidirect {
        actor: PathBuf,
        target: PathBuf,
        triple: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the canonical split extension.
        #[arg(long)]
        extension: Option<PathBuf>,
        /// Require the product to be reduced.
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare the derived-action conditions with validity of the product
    /// over every triple (or a seeded sample).
    Audit {
        actor: PathBuf,
        target: PathBuf,
        #[arg(long, value_enum)]
        theorem: Category,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        /// Product side of the comparison.
        #[arg(long, value_enum, default_value_t = Criterion::Object)]
        criterion: Criterion,
        #[arg(long)]
        json: bool,
    },
    /// List self-actions of the group in FILE, or ideals of the algebra in
    /// FILE, one JSON record per line.
    Enumerate {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Check a subset file against the ideal conditions.
    Ideal {
        algebra: PathBuf,
        subset: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the quotient by an ideal.
    Quotient {
        algebra: PathBuf,
        subset: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Category {
    #[value(name = "3.3", alias = "gwa")]
    Gwa,
    #[value(name = "4.3", alias = "reduced")]
    Reduced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Criterion {
    /// The product is an object.
    Object,
    /// The product is an object and its canonical extension gives the
    /// triple back.
    Roundtrip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    SelfActions,
    Ideals,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

pub fn run(args: impl IntoIterator<Item = OsString>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Io {
        path: "<stdout>".into(),
        source: e,
    })
}

fn report(out: &mut dyn Write, r: &CheckReport, json: bool) -> Result<i32> {
    if json {
        emit(out, &to_json(r))?;
    } else {
        let text = r.to_string();
        emit(out, &text)?;
        if !text.ends_with('\n') {
            emit(out, "\n")?;
        }
    }
    Ok(if r.ok { EXIT_OK } else { EXIT_LAW_FAILED })
}

/// The triple file must name the algebras given on the command line.
fn load_triple(actor: &Path, target: &Path, triple: &Path) -> Result<crate::ActionTriple> {
    let mut ws = Workspace::new();
    let b = ws.load(actor)?;
    let a = ws.load(target)?;
    let f = read_json::<ActionFile>(triple)?;
    for (role, given, named) in [
        ("actor", b.name(), &f.actor),
        ("target", a.name(), &f.target),
    ] {
        if given != named {
            return Err(Error::NameMismatch {
                role: role.into(),
                expected: given.to_owned(),
                found: named.clone(),
            });
        }
    }
    ws.triple(&f)
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Validate {
            file,
            reduced,
            json,
        } => {
            let g = crate::format::read_algebra(&file)?;
            let mut r = validate_gwa(&g);
            if reduced {
                r = r.merge(is_reduced(&g));
            }
            report(out, &r, json)
        }
        Command::CheckAction {
            actor,
            target,
            triple,
            reduced,
            json,
        } => {
            let t = load_triple(&actor, &target, &triple)?;
            let r = if reduced {
                is_derived_action_reduced(&t)?
            } else {
                is_derived_action(&t)
            };
            report(out, &r, json)
        }
        Command::Semidirect {
            actor,
            target,
            triple,
            out: path,
            extension,
            reduced,
            json,
        } => {
            let t = load_triple(&actor, &target, &triple)?;
            let mode = if reduced { Mode::Reduced } else { Mode::Gwa };
            let mut c = SemidirectCandidate::from_triple(&t);
            let r = c.validate(mode);
            if !r.ok {
                return report(out, &r, json);
            }
            let r = roundtrip_check(&t)?;
            if !r.ok {
                return report(out, &r, json);
            }
            write_algebra(&path, &c.product)?;
            if let Some(p) = extension {
                let x = canonical_split_extension(&c)?;
                write_json(&p, &ExtensionFile::from_extension(&x))?;
            }
            report(out, &r, json)
        }
        Command::Audit {
            actor,
            target,
            theorem,
            seed,
            samples,
            criterion,
            json,
        } => {
            let mut ws = Workspace::new();
            let b = ws.load(&actor)?;
            let a = ws.load(&target)?;
            let opts = AuditOptions {
                product_test: match criterion {
                    Criterion::Object => ProductTest::Object,
                    Criterion::Roundtrip => ProductTest::ObjectInducingTriple,
                },
                seed,
                samples,
                ..AuditOptions::default()
            };
            let mode = match theorem {
                Category::Gwa => Mode::Gwa,
                Category::Reduced => Mode::Reduced,
            };
            let s = audit(&b, &a, mode, &opts)?;
            if json {
                emit(out, &to_json(&s))?;
            } else {
                emit(out, &audit_text(&s))?;
            }
            Ok(if s.all_agree() {
                EXIT_OK
            } else {
                EXIT_LAW_FAILED
            })
        }
        Command::Enumerate { file, what } => {
            let g = crate::format::read_algebra(&file)?;
            let mut text = String::new();
            match what {
                What::SelfActions => {
                    for h in enumerate_self_actions(g.group()) {
                        text += &serde_json::to_string(&AlgebraFile::from_algebra(&h))
                            .expect("serializes");
                        text.push('\n');
                    }
                }
                What::Ideals => {
                    for s in enumerate_ideals(&std::sync::Arc::new(g)) {
                        text += &serde_json::to_string(&SubsetFile::from_subset(&s))
                            .expect("serializes");
                        text.push('\n');
                    }
                }
            }
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Ideal {
            algebra,
            subset,
            json,
        } => {
            let mut ws = Workspace::new();
            ws.load(&algebra)?;
            let s = ws.subset(&read_json::<SubsetFile>(&subset)?)?;
            report(out, &is_ideal(&s), json)
        }
        Command::Quotient {
            algebra,
            subset,
            out: path,
        } => {
            let mut ws = Workspace::new();
            ws.load(&algebra)?;
            let s = ws.subset(&read_json::<SubsetFile>(&subset)?)?;
            let q = quotient_gwa(&s)?;
            write_algebra(&path, &q.algebra)?;
            emit(
                out,
                &format!("{} has order {}\n", q.algebra.name(), q.algebra.order()),
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn audit_text(s: &AuditSummary) -> String {
    let mut t = format!(
        "mode: {}, product test: {}\nactor: {}\ntarget: {}\nscanned: {} ({})\nagree: {}/{}\nboth hold: {}\n",
        s.mode,
        match s.product_test {
            ProductTest::Object => "object",
            ProductTest::ObjectInducingTriple => "object inducing the triple",
        },
        s.actor,
        s.target,
        s.total,
        match s.seed {
            Some(seed) => format!("sampled, seed {seed}"),
            None => "exhaustive".into(),
        },
        s.agree,
        s.total,
        s.derived,
    );
    t += &format!("disagreements: {}\n", s.disagreements.len());
    for d in &s.disagreements {
        t += &format!(
            "  conditions={} product={} dot={:?} star={:?} dual={:?}\n",
            d.derived, d.product, d.triple.dot, d.triple.star, d.triple.dual
        );
    }
    t += &format!("elapsed: {} ms\n", s.elapsed_ms);
    t
}
