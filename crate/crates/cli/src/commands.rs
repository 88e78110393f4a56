use std::io::{Read, Write};

use snakebox_core::beam::{search, SearchConfig};
use snakebox_core::exact::{solve, Budget, SolverOptions, Status};
use snakebox_core::records::{table_issues, verify_corpus, TABLE};
use snakebox_core::{complete_cycle, validate, walk, Kind, TransitionSequence};

use crate::args::{Cli, Command, Format, Representation};
use crate::io::{
    dimension, format_sequence, format_vertices, parse_vertices, read_input, read_sequence,
};
use crate::{CliError, WallClock, EXIT_INVALID, EXIT_OK};

type Outcome = Result<i32, CliError>;

pub(crate) fn dispatch(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Verify {
            kind,
            dim,
            format,
            file,
        } => verify(kind.into(), dim, format, file.as_deref(), stdin, out),
        Command::Walk { dim, start, file } => {
            let n = dimension(dim)?;
            let start = n
                .vertex(start)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let seq = read_sequence(file.as_deref(), stdin)?;
            let vertices = walk(&seq, n, start).map_err(|e| CliError::Invalid(e.to_string()))?;
            emit(out, &format_vertices(&vertices))?;
            Ok(EXIT_OK)
        }
        Command::Exact {
            kind,
            dim,
            max_nodes,
            max_seconds,
        } => {
            let n = dimension(dim)?;
            let budget =
                Budget::new(max_nodes, max_seconds).map_err(|e| CliError::Usage(e.to_string()))?;
            let result = solve(
                kind.into(),
                n,
                budget,
                SolverOptions::default(),
                &WallClock::start(),
            );
            let status = match result.status {
                Status::Proven => "proven",
                Status::BudgetExhausted => "budget-exhausted",
            };
            emit(
                out,
                &format!(
                    "best_length: {}\nstatus: {status}\nnodes: {}\nwitness: {}\n",
                    result.best_length, result.nodes, result.witness
                ),
            )?;
            Ok(EXIT_OK)
        }
        Command::Search {
            kind,
            dim,
            beam,
            seed,
            restarts,
            temp,
            max_seconds,
        } => {
            let n = dimension(dim)?;
            let config = SearchConfig {
                restarts,
                temperature: temp,
                max_seconds: max_seconds.unwrap_or(f64::INFINITY),
                ..SearchConfig::new(n, kind.into(), beam, seed)
            };
            let outcome =
                search(&config, &WallClock::start()).map_err(|e| CliError::Usage(e.to_string()))?;
            let s = outcome.stats;
            emit(
                out,
                &format!(
                    "best_length: {}\nsequence: {}\nsteps: {}\nexpansions: {}\nrestarts_used: {}\nseconds: {:.3}\n",
                    outcome.best_length, outcome.best, s.steps, s.expansions, s.restarts_used, s.seconds
                ),
            )?;
            Ok(EXIT_OK)
        }
        Command::Records { check } => records(check, out),
        Command::Convert {
            from,
            to,
            dim,
            start,
            file,
        } => {
            let n = dimension(dim)?;
            match (from, to) {
                (Representation::Transitions, Representation::Vertices) => {
                    let start = n
                        .vertex(start)
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                    let seq = read_sequence(file.as_deref(), stdin)?;
                    let vertices =
                        walk(&seq, n, start).map_err(|e| CliError::Invalid(e.to_string()))?;
                    emit(out, &format_vertices(&vertices))?;
                }
                (Representation::Vertices, Representation::Transitions) => {
                    let text = read_input(file.as_deref(), stdin)?;
                    let vertices = parse_vertices(&text, n)?;
                    let seq = TransitionSequence::from_vertices(&vertices)
                        .map_err(|e| CliError::Invalid(e.to_string()))?;
                    emit(out, &format_sequence(&seq))?;
                }
                _ => return Err(CliError::Usage("--from and --to must differ".into())),
            }
            Ok(EXIT_OK)
        }
    }
}

fn verify(
    kind: Kind,
    dim: u32,
    format: Format,
    file: Option<&std::path::Path>,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Outcome {
    let n = dimension(dim)?;
    let mut seq = read_sequence(file, stdin)?;
    if kind == Kind::Coil {
        if let Some(closed) = complete_cycle(&seq, n) {
            seq = closed;
        }
    }
    let report = validate(kind, &seq, n);
    let text = match format {
        Format::Text => format!("{report}\n"),
        Format::Json => {
            let mut s = serde_json::to_string(&report).expect("report serializes");
            s.push('\n');
            s
        }
    };
    emit(out, &text)?;
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

fn records(check: bool, out: &mut dyn Write) -> Outcome {
    let mut text = String::from("n\tsnake\tcoil\n");
    for row in TABLE.iter() {
        let show = |c: &snakebox_core::records::Cell| {
            let mut s = format!(
                "{}{} [{}]",
                c.length,
                if c.optimal { "*" } else { "" },
                c.source
            );
            if let Some((len, src)) = c.previous {
                s.push_str(&format!(" (was {len} [{src}])"));
            }
            s
        };
        text.push_str(&format!(
            "{}\t{}\t{}\n",
            row.dimension,
            show(&row.snake),
            show(&row.coil)
        ));
    }
    if !check {
        emit(out, &text)?;
        return Ok(EXIT_OK);
    }

    let mut ok = true;
    for report in verify_corpus() {
        ok &= report.valid;
        let verdict = if report.valid { "ok" } else { "FAIL" };
        text.push_str(&format!(
            "{verdict}\t{} n={} length {}\n",
            report.kind, report.dimension, report.length
        ));
    }
    let issues = table_issues();
    ok &= issues.is_empty();
    for issue in &issues {
        text.push_str(&format!("FAIL\ttable: {issue:?}\n"));
    }
    if issues.is_empty() {
        text.push_str("ok\ttable consistency\n");
    }
    emit(out, &text)?;
    Ok(if ok { EXIT_OK } else { EXIT_INVALID })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Usage(format!("write failed: {e}")))
}
