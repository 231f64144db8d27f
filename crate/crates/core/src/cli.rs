//! The `lights` command line: `value`, `best`, `table` and `verify`.

use std::io::{self, Write};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::fast::grundy_fast;
use crate::fixture::{parse_position, Component, Position};
use crate::strategy::{best_line, WinningLine};
use crate::sum::{gsum_all, Outcome};
use crate::value::GrundyValue;
use crate::verify::{
    component_count, nth_component, playout_check, verify_range, PlayoutConfig, PlayoutReport,
    VerifyReport, MAX_VERIFY_LEN,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lights", version, about = "Christmas Lights' Fixture solver")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print the moon as ☾.
    #[arg(long, global = true)]
    pub unicode: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grundy value of every component, the sum and its outcome.
    Value {
        /// Position such as "bsb + b2s1b1"; "0" is the empty position.
        position: String,
    },
    /// A winning turn for the player to move, if there is one.
    Best { position: String },
    /// Values of all components up to a length.
    Table {
        #[arg(long, default_value_t = 3)]
        len: u32,
    },
    /// Check the fast solver against the exhaustive oracle.
    Verify {
        #[arg(long, default_value_t = 14)]
        len: u32,
        /// Also compare play-out search with the nim-sum rule:
        /// PIECES COMPONENTS SAMPLES [SEED].
        #[arg(long, num_args = 3..=4, value_names = ["PIECES", "COMPONENTS", "SAMPLES", "SEED"])]
        playout: Option<Vec<u64>>,
        /// Seed for --playout when not given inline.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub input: String,
    pub runs: String,
    pub grundy: GrundyValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub components: Vec<ComponentReport>,
    pub sum: GrundyValue,
    pub outcome: Outcome,
    /// Present for `best`; `null` on a P-position.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<Option<WinningLine>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub final_value: Option<GrundyValue>,
}

impl AnalysisReport {
    pub fn new(text: &str, position: &Position) -> Self {
        let inputs: Vec<&str> = if position.components().is_empty() {
            Vec::new()
        } else {
            text.split('+').map(str::trim).collect()
        };
        let components: Vec<ComponentReport> = position
            .components()
            .iter()
            .zip(inputs)
            .map(|(c, input)| ComponentReport {
                input: input.to_string(),
                runs: c.run_notation(),
                grundy: grundy_fast(c),
            })
            .collect();
        let sum = gsum_all(components.iter().map(|c| c.grundy));
        AnalysisReport { components, sum, outcome: Outcome::of_value(sum), line: None, final_value: None }
    }
}

#[derive(Debug, Serialize)]
struct VerifyOutput {
    #[serde(flatten)]
    range: VerifyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    playout: Option<PlayoutReport>,
}

#[derive(Debug, Serialize)]
struct TableRow {
    input: String,
    runs: String,
    grundy: GrundyValue,
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_arg(text: &str, err: &mut dyn Write) -> io::Result<Option<Position>> {
    match parse_position(text) {
        Ok(p) => Ok(Some(p)),
        Err(e) => {
            writeln!(err, "error: cannot parse position {text:?}: {e}")?;
            Ok(None)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let unicode = cli.unicode;
    match &cli.command {
        Command::Value { position: text } => {
            let Some(position) = parse_arg(text, err)? else { return Ok(EXIT_USAGE) };
            let report = AnalysisReport::new(text, &position);
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
            } else {
                write_analysis(out, &report, unicode)?;
            }
            Ok(EXIT_OK)
        }
        Command::Best { position: text } => {
            let Some(position) = parse_arg(text, err)? else { return Ok(EXIT_USAGE) };
            let mut report = AnalysisReport::new(text, &position);
            let line = best_line(&position);
            let end = line.as_ref().and_then(|l| l.play(&position));
            report.final_value = end.as_ref().map(crate::sum::position_value);
            report.line = Some(line.clone());
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
                return Ok(EXIT_OK);
            }
            write_analysis(out, &report, unicode)?;
            match (line, end) {
                (Some(line), Some(end)) => {
                    writeln!(out, "winning line ({} moves):", line.moves.len())?;
                    for (i, mv) in line.moves.iter().enumerate() {
                        writeln!(out, "  {}. {mv}", i + 1)?;
                    }
                    writeln!(out, "result: {end}")?;
                    writeln!(out, "final value: {}", crate::sum::position_value(&end).plain(unicode))?;
                }
                _ => writeln!(out, "P-position: every move loses")?,
            }
            Ok(EXIT_OK)
        }
        Command::Table { len } => {
            if *len < 1 || *len > 20 {
                writeln!(err, "error: --len must be between 1 and 20")?;
                return Ok(EXIT_USAGE);
            }
            let rows: Vec<TableRow> = table_order(*len)
                .into_iter()
                .map(|c| TableRow { input: c.to_string(), runs: c.run_notation(), grundy: grundy_fast(&c) })
                .collect();
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&rows)?)?;
            } else {
                for row in rows {
                    writeln!(out, "{}:{}", row.input, table_value(row.grundy, unicode))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { len, playout, seed } => {
            if *len > MAX_VERIFY_LEN {
                writeln!(err, "error: --len must be at most {MAX_VERIFY_LEN}")?;
                return Ok(EXIT_USAGE);
            }
            let config = match playout.as_deref() {
                None => None,
                Some(&[pieces, components, samples, ref rest @ ..]) => {
                    if pieces > 20 || components == 0 {
                        writeln!(err, "error: --playout needs PIECES <= 20 and COMPONENTS >= 1")?;
                        return Ok(EXIT_USAGE);
                    }
                    Some(PlayoutConfig {
                        max_pieces: pieces as usize,
                        max_components: components as usize,
                        samples: samples as usize,
                        seed: rest.first().copied().unwrap_or(*seed),
                    })
                }
                Some(_) => unreachable!("clap enforces 3 or 4 values"),
            };
            let range = verify_range(*len);
            let playout = config.map(playout_check);
            let ok = range.mismatches.is_empty() && playout.as_ref().is_none_or(PlayoutReport::all_agree);
            let output = VerifyOutput { range, playout };
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&output)?)?;
            } else {
                write_verify(out, &output, unicode)?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}

fn table_value(v: GrundyValue, unicode: bool) -> String {
    match v {
        GrundyValue::Finite(0) => "0".to_string(),
        GrundyValue::Finite(n) => format!("*{n}"),
        GrundyValue::Moon => v.plain(unicode),
    }
}

/// Components of length `1..=max_len` grouped by length, then by socket
/// count; within a group the majority piece kind sorts first (bulbs on a tie).
pub fn table_order(max_len: u32) -> Vec<Component> {
    let mut rows: Vec<Component> = (1..component_count(max_len))
        .map(nth_component)
        .collect();
    rows.sort_by_cached_key(|c| {
        let sockets = c.sockets();
        let sockets_first = 2 * sockets > c.len();
        let key: Vec<bool> = c
            .pieces()
            .iter()
            .map(|&p| (p == crate::fixture::Piece::Socket) != sockets_first)
            .collect();
        (c.len(), sockets, key)
    });
    rows
}

fn write_analysis(out: &mut dyn Write, report: &AnalysisReport, unicode: bool) -> io::Result<()> {
    for (i, c) in report.components.iter().enumerate() {
        writeln!(out, "component {i}: {} ({}) = {}", c.input, c.runs, c.grundy.plain(unicode))?;
    }
    writeln!(out, "sum: {}", report.sum.plain(unicode))?;
    writeln!(out, "outcome: {}", report.outcome)
}

fn write_verify(out: &mut dyn Write, output: &VerifyOutput, unicode: bool) -> io::Result<()> {
    let r = &output.range;
    writeln!(
        out,
        "checked {} components of length <= {}: {} mismatches",
        r.checked,
        r.max_len,
        r.mismatches.len()
    )?;
    for m in &r.mismatches {
        writeln!(out, "  {}: oracle {} fast {}", m.component, m.oracle.plain(unicode), m.fast.plain(unicode))?;
    }
    let mut hist = vec![format!("{}={}", GrundyValue::Moon.plain(unicode), r.histogram.moon)];
    hist.extend(r.histogram.finite.iter().map(|(n, c)| format!("{n}={c}")));
    writeln!(out, "histogram: {}", hist.join(" "))?;
    if let Some(p) = &output.playout {
        writeln!(
            out,
            "playout agreement {}/{} (pieces <= {}, components <= {}, seed {})",
            p.agreements, p.config.samples, p.config.max_pieces, p.config.max_components, p.config.seed
        )?;
        for d in &p.disagreements {
            writeln!(
                out,
                "  {}: playout {} oracle sum {} fast sum {}",
                d.position,
                d.playout,
                d.oracle_sum.plain(unicode),
                d.fast_sum.plain(unicode)
            )?;
        }
    }
    Ok(())
}
