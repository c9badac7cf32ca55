//! The `strcat` command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arquiver::{build_ar_quiver, build_family_ar_quiver, to_dot, ArQuiver};
use crate::deformation::{
    agrees_with_expected, classify, reports_to_csv, reports_to_json, UdrReport,
};
use crate::error::{Error, Result};
use crate::families::{named_string, Family, FamilyAlgebra};
use crate::homology::{
    canonical_homs, ext1_dim, hom_dim, indecomposable_projective, is_isomorphic, omega_power,
    stable_hom_dim, Representation, DEFAULT_SEED, DEFAULT_TRIALS,
};
use crate::linalg::{is_prime, Fp};
use crate::quiver::{Algebra, AlgebraSpec};
use crate::strings::{enumerate_strings, string_module, StringName, StringWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "strcat", version, about = "Strings, syzygies and deformation rings of symmetric special biserial algebras")]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Ae1,
    Ae2,
    Ae3,
    File,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Table,
}

fn parse_prime(s: &str) -> std::result::Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if is_prime(p) && Fp::new(p).is_some() {
        Ok(p)
    } else {
        Err(format!("{p} is not a prime below 2^31"))
    }
}

#[derive(Args, Debug, Clone)]
pub struct CliConfig {
    #[arg(long, global = true, value_enum, default_value = "ae1")]
    pub family: FamilyArg,
    #[arg(long, global = true, default_value_t = 2)]
    pub m: usize,
    #[arg(long, global = true, default_value_t = Fp::DEFAULT_PRIME, value_parser = parse_prime)]
    pub prime: u64,
    #[arg(long, global = true, env = "STRCAT_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Algebra description (JSON) for `--family file`.
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
    /// Check the output against the known results; exit 4 on disagreement.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Longest string length to enumerate.
    #[arg(long, global = true)]
    pub length_cap: Option<usize>,
    /// Read module arguments as string literals (`r~,a`, `e1`).
    #[arg(long, global = true)]
    pub string: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Facts about the algebra.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// List the strings.
    Strings,
    /// Dimensions of Hom and stable Hom between two modules.
    Hom { source: String, target: String },
    /// Dimension of Ext¹ between two modules.
    Ext { source: String, target: String },
    /// The n-th syzygy of a module.
    Syzygy {
        module: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// The stable Auslander–Reiten quiver.
    Arquiver,
    /// Modules with stable endomorphism ring k and their deformation rings.
    Classify,
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCommand {
    /// Dimension, basis and projectives.
    Info,
}

/// A failed run: the message and the exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_COMPUTATION,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Output text and whether `--verify` found a disagreement.
pub struct Outcome {
    pub text: String,
    pub verify_failed: bool,
}

struct Context {
    cfg: CliConfig,
    algebra: Arc<Algebra>,
    family: Option<FamilyAlgebra>,
}

impl Context {
    fn new(cfg: &CliConfig) -> std::result::Result<Self, Failure> {
        let field = Fp::new(cfg.prime).ok_or_else(|| usage("bad prime"))?;
        let family = match cfg.family {
            FamilyArg::Ae1 => Some(Family::Ae1),
            FamilyArg::Ae2 => Some(Family::Ae2),
            FamilyArg::Ae3 => Some(Family::Ae3),
            FamilyArg::File => None,
        };
        match family {
            Some(f) => {
                if cfg.m < f.min_m() {
                    return Err(usage(format!("{f} needs --m at least {}", f.min_m())));
                }
                let fa = FamilyAlgebra::new(f, cfg.m, field)?;
                Ok(Context {
                    cfg: cfg.clone(),
                    algebra: fa.algebra.clone(),
                    family: Some(fa),
                })
            }
            None => {
                let path = cfg
                    .spec
                    .as_ref()
                    .ok_or_else(|| usage("--family file needs --spec"))?;
                let text = std::fs::read_to_string(path).map_err(Error::from)?;
                let spec = AlgebraSpec::from_json(&text)?;
                Ok(Context {
                    cfg: cfg.clone(),
                    algebra: Arc::new(spec.build()?),
                    family: None,
                })
            }
        }
    }

    fn length_cap(&self) -> usize {
        self.cfg.length_cap.unwrap_or_else(|| match &self.family {
            Some(fa) => fa.family.length_cap(fa.m),
            None => 2 * self.algebra.loewy_bound() + 2,
        })
    }

    fn word(&self, arg: &str) -> Result<StringWord> {
        let q = self.algebra.quiver();
        if !self.cfg.string {
            if let (Some(fa), Ok(name)) = (&self.family, arg.parse::<StringName>()) {
                return named_string(fa.family, fa.m, name);
            }
        }
        StringWord::parse(q, arg)
    }

    fn module(&self, arg: &str) -> Result<Representation> {
        string_module(&self.algebra, &self.word(arg)?)
    }

    fn label(&self, w: &StringWord) -> String {
        self.family
            .as_ref()
            .and_then(|fa| fa.name_of(w))
            .map_or_else(|| w.display(self.algebra.quiver()), |n| n.to_string())
    }

    fn ar_quiver(&self) -> Result<ArQuiver> {
        match &self.family {
            Some(fa) if self.cfg.length_cap.is_none() => build_family_ar_quiver(fa, self.cfg.seed),
            Some(fa) => {
                let mut ar = build_ar_quiver(&self.algebra, self.length_cap(), self.cfg.seed)?;
                ar.label_with_family(fa);
                Ok(ar)
            }
            None => build_ar_quiver(&self.algebra, self.length_cap(), self.cfg.seed),
        }
    }
}

fn unsupported(cmd: &str, f: Format) -> Failure {
    usage(format!("`{cmd}` does not support --format {f:?}"))
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| Error::Parse(e.to_string()))?;
    for r in rows {
        w.write_record(r).map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

fn table_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                let pad = w - c.chars().count();
                let _ = write!(s, "{c}{}  ", " ".repeat(pad));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn rows_output(cmd: &str, format: Format, header: &[&str], rows: &[Vec<String>], json: serde_json::Value) -> std::result::Result<String, Failure> {
    match format {
        Format::Table => Ok(table_text(header, rows)),
        Format::Csv => Ok(csv_text(header, rows)?),
        Format::Json => Ok(serde_json::to_string_pretty(&json).map_err(Error::from)? + "\n"),
        Format::Dot => Err(unsupported(cmd, format)),
    }
}

fn cmd_algebra_info(ctx: &Context) -> std::result::Result<Outcome, Failure> {
    let alg = &ctx.algebra;
    let q = alg.quiver();
    let basis: Vec<String> = alg.basis().iter().map(|p| p.display(q)).collect();
    let projectives: Vec<(String, usize, Vec<Vec<usize>>)> = (0..q.vertex_count())
        .map(|v| {
            let p = indecomposable_projective(alg, v);
            (q.vertex_name(v).to_string(), p.total_dim(), p.radical_layers())
        })
        .collect();
    let verify_failed = ctx.cfg.verify
        && ctx.family.as_ref().is_some_and(|fa| {
            let want = match fa.family {
                Family::Ae1 => fa.m + 1,
                Family::Ae2 => 4 * fa.m + 2,
                Family::Ae3 => fa.m + 5,
            };
            alg.dim() != want || !alg.is_associative()
        });
    let layers = |l: &[Vec<usize>]| {
        l.iter()
            .map(|d| d.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" | ")
    };
    let text = match ctx.cfg.format {
        Format::Table => {
            let mut s = format!("dim {}\nbasis {}\n", alg.dim(), basis.join(" "));
            for (v, d, l) in &projectives {
                let _ = writeln!(s, "P({v}) dim {d} radical layers {}", layers(l));
            }
            s
        }
        Format::Json => {
            let v = json!({
                "dim": alg.dim(),
                "prime": alg.field().modulus(),
                "basis": basis,
                "projectives": projectives.iter().map(|(v, d, l)| json!({
                    "vertex": v, "dim": d, "radical_layers": l,
                })).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v).map_err(Error::from)? + "\n"
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = projectives
                .iter()
                .map(|(v, d, l)| vec![v.clone(), d.to_string(), layers(l)])
                .collect();
            csv_text(&["vertex", "projective_dim", "radical_layers"], &rows)?
        }
        Format::Dot => return Err(unsupported("algebra info", Format::Dot)),
    };
    Ok(Outcome { text, verify_failed })
}

fn cmd_strings(ctx: &Context) -> std::result::Result<Outcome, Failure> {
    let alg = &ctx.algebra;
    let strings = enumerate_strings(alg, ctx.length_cap())?;
    let rows: Vec<Vec<String>> = strings
        .iter()
        .map(|w| {
            vec![
                ctx.label(w),
                w.display(alg.quiver()),
                (w.len() + 1).to_string(),
            ]
        })
        .collect();
    let json = json!(rows
        .iter()
        .map(|r| json!({"module": r[0], "string": r[1], "dim": parse_count(&r[2])}))
        .collect::<Vec<_>>());
    let verify_failed = ctx.cfg.verify
        && ctx.family.as_ref().is_some_and(|fa| {
            let want = if fa.family == Family::Ae1 { fa.m } else { 4 * fa.m };
            strings.len() != want
        });
    Ok(Outcome {
        text: rows_output("strings", ctx.cfg.format, &["module", "string", "dim"], &rows, json)?,
        verify_failed,
    })
}

fn parse_count(s: &str) -> usize {
    s.parse().unwrap_or(0)
}

fn cmd_hom(ctx: &Context, s: &str, t: &str) -> std::result::Result<Outcome, Failure> {
    let (ws, wt) = (ctx.word(s)?, ctx.word(t)?);
    let (ms, mt) = (ctx.module(s)?, ctx.module(t)?);
    let hom = hom_dim(&ms, &mt)?;
    let stable = stable_hom_dim(&ms, &mt)?;
    let canonical = canonical_homs(&ctx.algebra, &ws, &wt).len();
    let rows = vec![vec![
        ctx.label(&ws),
        ctx.label(&wt),
        hom.to_string(),
        stable.to_string(),
        canonical.to_string(),
    ]];
    let json = json!({"source": rows[0][0], "target": rows[0][1], "hom_dim": hom,
        "stable_hom_dim": stable, "canonical_homs": canonical});
    Ok(Outcome {
        text: rows_output(
            "hom",
            ctx.cfg.format,
            &["source", "target", "hom_dim", "stable_hom_dim", "canonical_homs"],
            &rows,
            json,
        )?,
        verify_failed: ctx.cfg.verify && canonical != hom,
    })
}

fn cmd_ext(ctx: &Context, s: &str, t: &str) -> std::result::Result<Outcome, Failure> {
    let (ws, wt) = (ctx.word(s)?, ctx.word(t)?);
    let ext = ext1_dim(&ctx.module(s)?, &ctx.module(t)?)?;
    let rows = vec![vec![ctx.label(&ws), ctx.label(&wt), ext.to_string()]];
    let json = json!({"source": rows[0][0], "target": rows[0][1], "ext1_dim": ext});
    Ok(Outcome {
        text: rows_output("ext", ctx.cfg.format, &["source", "target", "ext1_dim"], &rows, json)?,
        verify_failed: false,
    })
}

fn cmd_syzygy(ctx: &Context, s: &str, n: usize) -> std::result::Result<Outcome, Failure> {
    let w = ctx.word(s)?;
    let m = ctx.module(s)?;
    // Labels come from the AR quiver when one exists for the algebra.
    let ar = ctx.ar_quiver().ok();
    let mut rows = Vec::new();
    let mut current = m.clone();
    for k in 1..=n {
        current = omega_power(&current, 1);
        let name = if current.is_zero() {
            "0".to_string()
        } else {
            ar.as_ref()
                .and_then(|ar| {
                    (0..ar.len()).find(|&i| {
                        ar.module(i).dims() == current.dims()
                            && is_isomorphic(ar.module(i), &current, ctx.cfg.seed, DEFAULT_TRIALS)
                    })
                    .map(|i| ar.label(i).to_string())
                })
                .unwrap_or_else(|| "?".to_string())
        };
        let dims = current
            .dims()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        rows.push(vec![k.to_string(), name, dims]);
    }
    let json = json!({
        "module": ctx.label(&w),
        "syzygies": rows.iter().map(|r| json!({"n": parse_count(&r[0]), "module": r[1], "dims": r[2]})).collect::<Vec<_>>(),
    });
    let verify_failed = ctx.cfg.verify
        && !is_isomorphic(&omega_power(&m, 4), &m, ctx.cfg.seed, DEFAULT_TRIALS);
    Ok(Outcome {
        text: rows_output("syzygy", ctx.cfg.format, &["n", "module", "dims"], &rows, json)?,
        verify_failed,
    })
}

fn cmd_arquiver(ctx: &Context) -> std::result::Result<Outcome, Failure> {
    let ar = ctx.ar_quiver()?;
    let verify_failed = ctx.cfg.verify
        && ctx.family.as_ref().is_some_and(|fa| {
            let want = if fa.family == Family::Ae1 { fa.m } else { 4 * fa.m };
            ar.len() != want || (fa.family == Family::Ae1 && ar.tau().iter().enumerate().any(|(i, &t)| i != t))
        });
    let text = match ctx.cfg.format {
        Format::Dot => to_dot(&ar),
        Format::Json => {
            let v = json!({
                "nodes": (0..ar.len()).map(|i| json!({
                    "label": ar.label(i),
                    "string": ar.nodes()[i].display(ctx.algebra.quiver()),
                    "omega": ar.label(ar.omega()[i]),
                    "tau": ar.label(ar.tau()[i]),
                })).collect::<Vec<_>>(),
                "arrows": ar.arrows().iter().map(|a| json!({
                    "source": ar.label(a.source),
                    "target": ar.label(a.target),
                    "kind": a.kind.tag(),
                })).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v).map_err(Error::from)? + "\n"
        }
        f => {
            let rows: Vec<Vec<String>> = ar
                .arrows()
                .iter()
                .map(|a| {
                    vec![
                        ar.label(a.source).to_string(),
                        ar.label(a.target).to_string(),
                        a.kind.tag().to_string(),
                    ]
                })
                .chain((0..ar.len()).map(|i| {
                    vec![ar.label(i).to_string(), ar.label(ar.tau()[i]).to_string(), "tau".to_string()]
                }))
                .collect();
            let header = ["source", "target", "kind"];
            if f == Format::Csv {
                csv_text(&header, &rows)?
            } else {
                table_text(&header, &rows)
            }
        }
    };
    Ok(Outcome { text, verify_failed })
}

fn reports_table(reports: &[UdrReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.module.clone(),
                r.string.clone(),
                r.stable_endo_dim.to_string(),
                r.ext1_dim.to_string(),
                r.udr.to_string(),
                r.trail.join("; "),
            ]
        })
        .collect();
    table_text(&["module", "string", "stable_end", "ext1", "udr", "trail"], &rows)
}

fn cmd_classify(ctx: &Context) -> std::result::Result<Outcome, Failure> {
    let ar = ctx.ar_quiver()?;
    let reports = classify(&ar, ctx.family.as_ref(), ctx.cfg.seed)?;
    let verify_failed = ctx.cfg.verify
        && ctx
            .family
            .as_ref()
            .is_some_and(|fa| !agrees_with_expected(&reports, fa.family, fa.m));
    let text = match ctx.cfg.format {
        Format::Json => reports_to_json(&reports)? + "\n",
        Format::Csv => reports_to_csv(&reports)?,
        Format::Table => reports_table(&reports),
        Format::Dot => return Err(unsupported("classify", Format::Dot)),
    };
    Ok(Outcome { text, verify_failed })
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> std::result::Result<Outcome, Failure> {
    let ctx = Context::new(&cli.config)?;
    match &cli.command {
        Command::Algebra {
            command: AlgebraCommand::Info,
        } => cmd_algebra_info(&ctx),
        Command::Strings => cmd_strings(&ctx),
        Command::Hom { source, target } => cmd_hom(&ctx, source, target),
        Command::Ext { source, target } => cmd_ext(&ctx, source, target),
        Command::Syzygy { module, n } => cmd_syzygy(&ctx, module, *n),
        Command::Arquiver => cmd_arquiver(&ctx),
        Command::Classify => cmd_classify(&ctx),
    }
}

/// Parses arguments, runs, writes output and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.config.output {
                Some(path) => std::fs::write(path, &out.text),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return EXIT_COMPUTATION;
            }
            if out.verify_failed {
                eprintln!("verification failed");
                EXIT_VERIFY
            } else {
                EXIT_OK
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
