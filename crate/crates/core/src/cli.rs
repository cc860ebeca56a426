//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification command finds a failure,
//! 2 on parse or usage errors.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arcnum::{arc_number, find_cutting_pair, min_partition};
use crate::curves::{forward_back_word, twin_double, verify_prop12_with, Prop12Guards};
use crate::diagram::{ChordDiagram, Format};
use crate::enumerate::{classes_with_guard, verify_lemmas, verify_theorem, VerifyOptions};
use crate::error::Error;
use crate::obstruction::{
    classify_star, contains_obstruction_with, find_obstruction, make_c, satisfies_star, StarClass,
};
use crate::realize::genus_min_with_guard;
use crate::render::{render_svg, RenderSpec};
use crate::Guards;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Pairing,
    Pairs,
    Gauss,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Auto => Format::Auto,
            FormatArg::Pairing => Format::Pairing,
            FormatArg::Pairs => Format::Pairs,
            FormatArg::Gauss => Format::Gauss,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "chordarc",
    version,
    about = "Arc numbers and obstructions of chord diagrams"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Override every size guard.
    #[arg(long, global = true, env = "ARCNUM_GUARD")]
    guard: Option<usize>,

    /// Worker threads (0 = all cores, 1 = sequential reference mode).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Input format; auto-detected by token shape when omitted.
    #[arg(long, global = true, value_enum, default_value = "auto")]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Diagram tokens; read one diagram per line from --input or stdin when absent.
    tokens: Vec<String>,

    /// File with one diagram per line.
    #[arg(short, long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Arc number.
    Arc {
        #[command(flatten)]
        input: Input,
        /// Also print a minimum set of cut gaps.
        #[arg(long)]
        witness: bool,
    },
    /// Antipodal cutting pair, or "none".
    Arc2 {
        #[command(flatten)]
        input: Input,
    },
    /// Canonical representative of the rotation class.
    Canon {
        #[command(flatten)]
        input: Input,
        /// Print the canonical distance code instead of a representative.
        #[arg(long)]
        code: bool,
    },
    /// Whether two diagrams are equivalent.
    Equiv {
        /// First diagram (quoted); with no arguments two lines are read from stdin.
        first: Option<String>,
        second: Option<String>,
        /// Allow reflections.
        #[arg(long)]
        dihedral: bool,
    },
    /// The obstruction diagram C_{2n+1}.
    MakeC { n: usize },
    /// A C_{2n+1} sub-diagram witness, or "none".
    Obstruction {
        #[command(flatten)]
        input: Input,
    },
    /// Whether some sub-diagram is equivalent to C_{2n+1}.
    Contains {
        n: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Classification of a diagram whose chords all have length m - 2.
    Star {
        #[command(flatten)]
        input: Input,
    },
    /// Census of equivalence classes of m-chord diagrams.
    Enum { m: usize },
    /// Check the arc = 2 characterization for every diagram up to m chords.
    VerifyTheorem {
        m: usize,
        /// Cross-check against the brute-force arc number up to this size.
        #[arg(long, default_value_t = crate::enumerate::DEFAULT_ORACLE_MAX_M)]
        oracle_max: usize,
    },
    /// Check the chord-length and cutting-pair lemmas on minimal obstructions.
    VerifyLemmas { m: usize },
    /// Planar realizability as a closed curve.
    Realize {
        #[command(flatten)]
        input: Input,
    },
    /// The forward-one, back-three Gauss word on the (2n+1)-cycle.
    GaussFb {
        n: usize,
        /// Print the diagram's pairing instead of the word.
        #[arg(long)]
        pairing: bool,
    },
    /// Replace every chord by a close parallel twin pair.
    Double {
        #[command(flatten)]
        input: Input,
    },
    /// Check a candidate curve diagram against index n.
    VerifyProp12 {
        n: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Draw a diagram as SVG.
    Render {
        #[command(flatten)]
        input: Input,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Highlight the chords of an extracted obstruction.
        #[arg(long)]
        obstruction: bool,
    },
}

/// JSON record shared by the per-diagram commands. Absent fields are omitted.
#[derive(Debug, Default, Serialize)]
struct Record {
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    code: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    arc: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    planar: Option<bool>,
}

impl Record {
    fn of(c: &ChordDiagram) -> Self {
        Record {
            m: Some(c.m()),
            code: Some(c.canonical_code().0),
            ..Record::default()
        }
    }
}

enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

struct Ctx<'a> {
    json: bool,
    format: Format,
    guards: Guards,
    stdin: &'a mut (dyn BufRead + Send),
    out: &'a mut (dyn Write + Send),
}

impl Ctx<'_> {
    fn read_lines(&mut self, path: &Option<PathBuf>) -> CliResult<Vec<String>> {
        let text = match path {
            Some(p) => std::fs::read_to_string(p)?,
            None => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                s
            }
        };
        Ok(text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect())
    }

    fn diagrams(&mut self, input: &Input) -> CliResult<Vec<ChordDiagram>> {
        if !input.tokens.is_empty() {
            return Ok(vec![ChordDiagram::parse(
                &input.tokens.join(" "),
                self.format,
            )?]);
        }
        let lines = self.read_lines(&input.input)?;
        if lines.is_empty() {
            return Ok(vec![ChordDiagram::empty()]);
        }
        Ok(lines
            .iter()
            .map(|l| ChordDiagram::parse(l, self.format))
            .collect::<Result<_, _>>()?)
    }

    fn emit(&mut self, text: impl AsRef<str>, record: &Record) -> CliResult<()> {
        if self.json {
            writeln!(
                self.out,
                "{}",
                serde_json::to_string(record).expect("record serializes")
            )?;
        } else {
            writeln!(self.out, "{}", text.as_ref())?;
        }
        Ok(())
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(
    argv: I,
    stdin: &mut (dyn BufRead + Send),
    out: &mut (dyn Write + Send),
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let guards = cli.guard.map_or_else(Guards::default, Guards::uniform);
    let mut ctx = Ctx {
        json: cli.json,
        format: cli.format.into(),
        guards,
        stdin,
        out,
    };
    let result = if cli.threads == 0 {
        dispatch(&cli.command, &mut ctx)
    } else {
        match rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build()
        {
            Ok(pool) => pool.install(|| dispatch(&cli.command, &mut ctx)),
            Err(e) => Err(CliError::Usage(e.to_string())),
        }
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: &Command, ctx: &mut Ctx<'_>) -> CliResult<i32> {
    match cmd {
        Command::Arc { input, witness } => {
            for c in ctx.diagrams(input)? {
                let arc = arc_number(&c);
                let cuts: Option<Vec<String>> = (*witness && !c.is_empty())
                    .then(|| min_partition(&c))
                    .transpose()?
                    .map(|p| p.cuts.iter().map(|g| g.to_string()).collect());
                let text = match &cuts {
                    Some(cuts) => format!("{arc} {}", cuts.join(" ")),
                    None => arc.to_string(),
                };
                let record = Record {
                    arc: Some(arc),
                    witness: cuts,
                    ..Record::of(&c)
                };
                ctx.emit(text, &record)?;
            }
        }
        Command::Arc2 { input } => {
            for c in ctx.diagrams(input)? {
                let pair = find_cutting_pair(&c)?;
                let text = pair.map_or("none".to_string(), |p| format!("{} {}", p.g1, p.g2));
                let record = Record {
                    arc: pair.map(|_| 2),
                    witness: pair.map(|p| vec![p.g1.to_string(), p.g2.to_string()]),
                    ..Record::of(&c)
                };
                ctx.emit(text, &record)?;
            }
        }
        Command::Canon { input, code } => {
            for c in ctx.diagrams(input)? {
                let canon = c.canonical_code();
                let text = if *code {
                    canon.to_string()
                } else {
                    canon.representative().to_pairing_string()
                };
                ctx.emit(text, &Record::of(&c))?;
            }
        }
        Command::Equiv {
            first,
            second,
            dihedral,
        } => {
            let (a, b) = match (first, second) {
                (Some(a), Some(b)) => (a.clone(), b.clone()),
                (None, None) => {
                    let lines = ctx.read_lines(&None)?;
                    if lines.len() != 2 {
                        return Err(CliError::Usage(format!(
                            "equiv expects 2 diagrams, got {}",
                            lines.len()
                        )));
                    }
                    (lines[0].clone(), lines[1].clone())
                }
                _ => return Err(CliError::Usage("equiv expects two diagrams".into())),
            };
            let a = ChordDiagram::parse(&a, ctx.format)?;
            let b = ChordDiagram::parse(&b, ctx.format)?;
            let eq = if *dihedral {
                a.equivalent_dihedral(&b)
            } else {
                a.equivalent(&b)
            };
            if ctx.json {
                writeln!(ctx.out, "{}", serde_json::json!({ "equivalent": eq }))?;
            } else {
                writeln!(ctx.out, "{eq}")?;
            }
        }
        Command::MakeC { n } => {
            let c = make_c(*n)?;
            let record = Record {
                n: Some(*n),
                ..Record::of(&c)
            };
            ctx.emit(c.to_pairing_string(), &record)?;
        }
        Command::Obstruction { input } => {
            for c in ctx.diagrams(input)? {
                let w = find_obstruction(&c);
                let text = match &w {
                    Some(w) => {
                        let chords: Vec<String> =
                            w.chords.iter().map(|ch| ch.to_string()).collect();
                        format!("n={} {}", w.n, chords.join(" "))
                    }
                    None => "none".to_string(),
                };
                let record = Record {
                    arc: Some(arc_number(&c)),
                    witness: w
                        .as_ref()
                        .map(|w| w.chords.iter().map(|ch| ch.to_string()).collect()),
                    n: w.as_ref().map(|w| w.n),
                    ..Record::of(&c)
                };
                ctx.emit(text, &record)?;
            }
        }
        Command::Contains { n, input } => {
            for c in ctx.diagrams(input)? {
                let found = contains_obstruction_with(&c, *n, ctx.guards.subset, true)?;
                if ctx.json {
                    writeln!(
                        ctx.out,
                        "{}",
                        serde_json::json!({ "n": n, "contains": found })
                    )?;
                } else {
                    writeln!(ctx.out, "{found}")?;
                }
            }
        }
        Command::Star { input } => {
            for c in ctx.diagrams(input)? {
                let text = if satisfies_star(&c)? {
                    match classify_star(&c)? {
                        StarClass::ArcTwo => "arc-two".to_string(),
                        StarClass::EquivalentToCm { n } => format!("equivalent-to-C n={n}"),
                    }
                } else {
                    "not-star".to_string()
                };
                if ctx.json {
                    writeln!(
                        ctx.out,
                        "{}",
                        serde_json::json!({ "m": c.m(), "class": text })
                    )?;
                } else {
                    writeln!(ctx.out, "{text}")?;
                }
            }
        }
        Command::Enum { m } => {
            let census = classes_with_guard(*m, ctx.guards.enumeration)?;
            if ctx.json {
                for e in &census {
                    writeln!(
                        ctx.out,
                        "{}",
                        serde_json::to_string(e).expect("census serializes")
                    )?;
                }
            } else {
                writeln!(ctx.out, "# m={m} classes={}", census.len())?;
                writeln!(ctx.out, "orbit\tarc\tcut\tobstr\tstar\tminimal\tcode")?;
                for e in &census {
                    writeln!(
                        ctx.out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        e.orbit_size,
                        e.arc,
                        e.cutting_pair,
                        e.obstruction,
                        e.star,
                        e.minimal,
                        e.code
                    )?;
                }
            }
        }
        Command::VerifyTheorem { m, oracle_max } => {
            let opts = VerifyOptions {
                m_max: *m,
                guard: ctx.guards.verify,
                oracle_max_m: (*oracle_max).min(ctx.guards.bruteforce),
            };
            let report = verify_theorem(&opts)?;
            write!(ctx.out, "{}", report.to_jsonl())?;
            return Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            });
        }
        Command::VerifyLemmas { m } => {
            let opts = VerifyOptions {
                guard: ctx.guards.verify,
                ..VerifyOptions::new(*m)
            };
            let report = verify_lemmas(&opts)?;
            for v in &report.violations {
                writeln!(ctx.out, "{}", serde_json::json!({ "violation": v }))?;
            }
            let summary = serde_json::json!({
                "summary": {
                    "m_max": report.m_max,
                    "minimal_by_m": report.minimal_by_m,
                    "minimal": report.minimal,
                    "length_checks": report.length_checks,
                    "separation_checks": report.separation_checks,
                    "violations": report.violations.len(),
                }
            });
            writeln!(ctx.out, "{summary}")?;
            return Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            });
        }
        Command::Realize { input } => {
            for c in ctx.diagrams(input)? {
                if c.is_empty() {
                    let record = Record {
                        planar: Some(true),
                        ..Record::of(&c)
                    };
                    ctx.emit("planar", &record)?;
                    continue;
                }
                let g = genus_min_with_guard(&c, ctx.guards.genus)?;
                let planar = g.genus == 0;
                let bits = g.choice_string(c.m());
                let text = if planar {
                    format!("planar\nrotation {bits}")
                } else {
                    format!("genus >= 1 (min genus {})", g.genus)
                };
                let record = Record {
                    planar: Some(planar),
                    witness: planar.then(|| vec![bits]),
                    ..Record::of(&c)
                };
                ctx.emit(text, &record)?;
            }
        }
        Command::GaussFb { n, pairing } => {
            let w = forward_back_word(*n)?;
            let c = w.to_diagram();
            let text = if *pairing {
                c.to_pairing_string()
            } else {
                w.to_string()
            };
            let record = Record {
                n: Some(*n),
                ..Record::of(&c)
            };
            ctx.emit(text, &record)?;
        }
        Command::Double { input } => {
            for c in ctx.diagrams(input)? {
                let doubled = twin_double(&c);
                ctx.emit(doubled.to_pairing_string(), &Record::of(&doubled))?;
            }
        }
        Command::VerifyProp12 { n, input } => {
            let mut all_pass = true;
            let guards = Prop12Guards {
                subset: ctx.guards.subset,
                genus: ctx.guards.genus,
            };
            for c in ctx.diagrams(input)? {
                let r = verify_prop12_with(&c, *n, guards)?;
                all_pass &= r.passed();
                if ctx.json {
                    writeln!(
                        ctx.out,
                        "{}",
                        serde_json::to_string(&r).expect("report serializes")
                    )?;
                } else {
                    let mark = |b: bool| if b { "pass" } else { "FAIL" };
                    writeln!(ctx.out, "arc == 3: {}", mark(r.arc_is_three))?;
                    writeln!(
                        ctx.out,
                        "contains C_(2n+1) for n={n}: {}",
                        mark(r.contains_target)
                    )?;
                    writeln!(
                        ctx.out,
                        "no C_(2k+1) for k < {n}: {}",
                        mark(r.avoids_smaller)
                    )?;
                    writeln!(ctx.out, "planar: {}", mark(r.planar))?;
                    writeln!(ctx.out, "overall: {}", mark(r.passed()))?;
                }
            }
            return Ok(if all_pass { EXIT_OK } else { EXIT_FAILED });
        }
        Command::Render {
            input,
            output,
            obstruction,
        } => {
            let diagrams = ctx.diagrams(input)?;
            let [c] = diagrams.as_slice() else {
                return Err(CliError::Usage("render takes exactly one diagram".into()));
            };
            let highlight = if *obstruction {
                find_obstruction(c).map(|w| w.chords).unwrap_or_default()
            } else {
                Vec::new()
            };
            let spec = RenderSpec {
                highlight,
                ..RenderSpec::default()
            };
            let svg = render_svg(c, &spec)?;
            match output {
                Some(path) => std::fs::write(path, svg)?,
                None => write!(ctx.out, "{svg}")?,
            }
        }
    }
    Ok(EXIT_OK)
}
