//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error (the error name is printed
//! on stderr) or a failed verification, 2 on a usage error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::mdiagram::{DiagramJson, MDiagram};
use crate::oracle::{enumerate, verify_scoped, Filter, Scope, Theorem};
use crate::svg;
use crate::tableau::{
    evacuate, fold, partial_fold, promote, promote_inverse, rotate180_complement, unfold, Shape, Tableau,
};
use crate::web::{PlanarWeb, WebJson};
use crate::web2::{fold2, tableau_of_web2, web2_of_tableau, Matching2};
use crate::web3::{crossed_mdiagram, crossed_web, decompose_blocks, domino_of_symmetric_web, tableau_of_web, web_of_tableau};

#[derive(Debug, Parser)]
#[command(name = "webfold", version, about = "Promotion, evacuation and folding of rectangular tableaux and webs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a tableau operator to a row word.
    Op {
        #[arg(long, value_enum)]
        apply: Operator,
        #[arg(long)]
        word: String,
        /// Number of partial folding steps for `partial-fold`.
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// 2-webs (noncrossing matchings).
    Web2 {
        #[command(subcommand)]
        action: Web2Action,
    },
    /// 3-webs and m-diagrams.
    Web3 {
        #[command(subcommand)]
        action: Web3Action,
    },
    /// Exhaustively check a theorem on small rectangles.
    Verify {
        #[arg(long)]
        theorem: String,
        /// Largest n for both families unless `--max-n-3` is given.
        #[arg(long)]
        max_n: usize,
        /// Largest n for the three-row family.
        #[arg(long)]
        max_n_3: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw a web, 2-web or m-diagram JSON file as SVG.
    Render {
        #[command(flatten)]
        input: Input,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List standard tableaux of a straight shape, one row word per line.
    Enumerate {
        /// `RxC` for a rectangle or comma-separated row lengths.
        #[arg(long)]
        shape: String,
        #[arg(long, default_value = "all")]
        filter: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Operator {
    Promote,
    PromoteInverse,
    Evacuate,
    Fold,
    PartialFold,
    Unfold,
    RotateComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Input {
    /// JSON input file; stdin when omitted.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Web2Action {
    FromTableau {
        #[arg(long)]
        word: String,
    },
    ToTableau {
        #[command(flatten)]
        input: Input,
    },
    Fold {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Debug, Subcommand)]
pub enum Web3Action {
    FromTableau {
        #[arg(long)]
        word: String,
    },
    ToTableau {
        #[command(flatten)]
        input: Input,
    },
    /// Domino tableau of a symmetrical web.
    ToDomino {
        #[command(flatten)]
        input: Input,
    },
    /// Symmetrical web of a domino tableau.
    Crossed {
        #[arg(long)]
        word: String,
    },
    /// m-diagram of a tableau.
    Mdiagram {
        #[arg(long)]
        word: String,
    },
    /// Crossed m-diagram of a domino tableau.
    CrossedMdiagram {
        #[arg(long)]
        word: String,
    },
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    match &input.input {
        Some(p) => s = fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        None => {
            stdin.read_to_string(&mut s).map_err(|e| Error::Parse(e.to_string()))?;
        }
    }
    Ok(s)
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn read_web(input: &Input, stdin: &mut dyn Read) -> Result<PlanarWeb> {
    PlanarWeb::from_json(&parse_json::<WebJson>(&read_input(input, stdin)?)?)
}

fn read_matching(input: &Input, stdin: &mut dyn Read) -> Result<Matching2> {
    parse_json(&read_input(input, stdin)?)
}

fn parse_shape(s: &str) -> Result<Shape> {
    let bad = || Error::Parse(format!("bad shape {s:?}; use RxC or a,b,c"));
    if let Some((r, c)) = s.split_once(['x', 'X']) {
        let r: usize = r.trim().parse().map_err(|_| bad())?;
        let c: usize = c.trim().parse().map_err(|_| bad())?;
        return Ok(Shape::rectangle(r, c));
    }
    let rows: Vec<usize> = s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
    Shape::straight(rows)
}

fn show_tableau(t: &Tableau, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n{t}", t.word()),
        Format::Json => to_json(t),
    }
}

/// Runs a parsed command; returns whether it succeeded in the domain sense
/// (a verification with failures is `Ok(false)`).
pub fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<bool> {
    let mut emit = |s: String| {
        let _ = writeln!(out, "{}", s.trim_end());
    };
    match cli.command {
        Command::Op { apply, word, j, format } => {
            let t = Tableau::from_word(&word)?;
            let r = match apply {
                Operator::Promote => promote(&t)?,
                Operator::PromoteInverse => promote_inverse(&t)?,
                Operator::Evacuate => evacuate(&t)?,
                Operator::Fold => fold(&t)?,
                Operator::PartialFold => partial_fold(&t, j)?,
                Operator::Unfold => unfold(&t)?,
                Operator::RotateComplement => rotate180_complement(&t)?,
            };
            emit(show_tableau(&r, format));
        }
        Command::Web2 { action } => match action {
            Web2Action::FromTableau { word } => emit(to_json(&web2_of_tableau(&Tableau::from_word(&word)?)?)),
            Web2Action::ToTableau { input } => emit(tableau_of_web2(&read_matching(&input, stdin)?)?.word()),
            Web2Action::Fold { input } => emit(to_json(&fold2(&read_matching(&input, stdin)?)?)),
        },
        Command::Web3 { action } => match action {
            Web3Action::FromTableau { word } => emit(to_json(&web_of_tableau(&Tableau::from_word(&word)?)?.to_json())),
            Web3Action::ToTableau { input } => emit(tableau_of_web(&read_web(&input, stdin)?)?.word()),
            Web3Action::ToDomino { input } => emit(domino_of_symmetric_web(&read_web(&input, stdin)?)?.word()),
            Web3Action::Crossed { word } => emit(to_json(&crossed_web(&Tableau::from_word(&word)?)?.to_json())),
            Web3Action::Mdiagram { word } => emit(to_json(&MDiagram::of_tableau(&Tableau::from_word(&word)?)?.to_json())),
            Web3Action::CrossedMdiagram { word } => {
                let dec = decompose_blocks(&Tableau::from_word(&word)?)?;
                let d = crossed_mdiagram(&dec.compression, dec.compression0.as_ref(), &dec.vertical_pairs)?;
                emit(to_json(&d.to_json()));
            }
        },
        Command::Verify { theorem, max_n, max_n_3, format } => {
            let theorem: Theorem = theorem.parse()?;
            let scope = Scope { two_row: max_n, three_row: max_n_3.unwrap_or(max_n) };
            let report = verify_scoped(theorem, scope);
            match format {
                Format::Text => emit(report.to_string()),
                Format::Json => emit(to_json(&report)),
            }
            return Ok(report.passed());
        }
        Command::Render { input, out: path } => {
            let text = read_input(&input, stdin)?;
            let value: serde_json::Value = parse_json(&text)?;
            let drawing = if value.get("rotation").is_some() {
                svg::render_web(&PlanarWeb::from_json(&parse_json::<WebJson>(&text)?)?)
            } else if value.get("boundary").is_some() {
                svg::render_mdiagram(&MDiagram::from_json(&parse_json::<DiagramJson>(&text)?)?)
            } else {
                svg::render_web2(&parse_json::<Matching2>(&text)?)
            };
            match path {
                Some(p) => fs::write(&p, drawing).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
                None => emit(drawing),
            }
        }
        Command::Enumerate { shape, filter } => {
            let filter: Filter = filter.parse()?;
            for t in enumerate(&parse_shape(&shape)?, filter)? {
                emit(t.word());
            }
        }
    }
    Ok(true)
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli, stdin, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", e.name());
            1
        }
    }
}

/// Entry point for the `webfold` binary.
pub fn main() -> i32 {
    run(std::env::args_os(), &mut io::stdin(), &mut io::stdout(), &mut io::stderr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("webfold").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn operators() {
        let (code, out, _) = call(&["op", "--apply", "promote", "--word", "1122"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("1212"));
        let (code, _, err) = call(&["op", "--apply", "fold", "--word", "2112"], "");
        assert_eq!(code, 1);
        assert!(err.starts_with("NonLatticeWord"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["op", "--apply", "nope", "--word", "12"], "").0, 2);
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn web2_pipeline_through_stdin() {
        let (_, m, _) = call(&["web2", "from-tableau", "--word", "11212122"], "");
        let (code, t, _) = call(&["web2", "to-tableau"], &m);
        assert_eq!((code, t.trim()), (0, "11212122"));
        let (code, f, _) = call(&["web2", "fold"], &m);
        assert_eq!(code, 0);
        assert!(f.contains("\"arcs\""));
    }

    #[test]
    fn web3_round_trip_and_domino() {
        let (_, w, _) = call(&["web3", "from-tableau", "--word", "112323"], "");
        assert_eq!(call(&["web3", "to-tableau"], &w).1.trim(), "112323");
        let (code, _, err) = call(&["web3", "to-domino"], &w);
        assert_eq!(code, 1);
        assert!(err.starts_with("NotSymmetrical"), "{err}");
        let (_, sym, _) = call(&["web3", "from-tableau", "--word", "112123233"], "");
        let (code, d, _) = call(&["web3", "to-domino"], &sym);
        assert_eq!(code, 0);
        let (_, crossed, _) = call(&["web3", "crossed", "--word", d.trim()], "");
        assert_eq!(call(&["web3", "to-tableau"], &crossed).1.trim(), "112123233");
        assert_eq!(call(&["web3", "crossed-mdiagram", "--word", d.trim()], "").0, 0);
    }

    #[test]
    fn verify_and_enumerate() {
        let (code, out, _) = call(&["verify", "--theorem", "fold-domino", "--max-n", "3"], "");
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("PASS fold-domino"));
        let (code, _, err) = call(&["verify", "--theorem", "bogus", "--max-n", "3"], "");
        assert_eq!(code, 1);
        assert!(err.starts_with("UnknownTheorem"));
        let (_, out, _) = call(&["enumerate", "--shape", "2x3"], "");
        assert_eq!(out.lines().count(), 5);
        let (_, out, _) = call(&["enumerate", "--shape", "3x2", "--filter", "symmetric"], "");
        assert_eq!(out.lines().count(), 3);
    }

    #[test]
    fn render_detects_input_kind() {
        for args in [["web3", "from-tableau"], ["web3", "mdiagram"], ["web2", "from-tableau"]] {
            let word = if args[0] == "web2" { "1122" } else { "112323" };
            let (_, json, _) = call(&[args[0], args[1], "--word", word], "");
            let (code, svg, _) = call(&["render"], &json);
            assert_eq!(code, 0);
            assert!(svg.starts_with("<svg"));
        }
    }
}
