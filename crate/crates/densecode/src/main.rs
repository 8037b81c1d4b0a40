//! Command-line front end: subgroup construction, exhaustive audit,
//! operator-set selection, table emission, and the encode/decode round trip.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use densecode::codec::{emit_multiplication_table, Codebook, Ordering, TableFormat};
use densecode::error::{Error, Result};
use densecode::select::FilterMode;
use densecode::subgroup::{distinct_subgroups, enumerate_all_subgroups, Subgroup};
use densecode::{
    builtin_state, compare_methods, construct_mgp_subgroups, lambda_count, select, LabelBook,
    PositionSet, SymmetricState,
};

#[derive(Parser)]
#[command(
    name = "densecode",
    about = "Multiplicative phaseless-Pauli subgroups and maximal dense coding tables",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the 2^t-order subgroup listing for a t-qubit state.
    Construct {
        /// Qubit count t of the target state (operators act on ⌈t/2⌉ qubits).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        qubits: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exhaustive subspace census and diff against the construction.
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
        qubits: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Select the operator sets that verify on a state.
    Select {
        #[command(flatten)]
        state: StateArg,
        /// Optional pre-filter before the authoritative verification.
        #[arg(long, value_enum, default_value_t = FilterMode::None)]
        filter: FilterMode,
        /// Render the baseline/construction/census comparison instead.
        #[arg(long)]
        compare: bool,
        /// Add the exhaustive-census column to the comparison.
        #[arg(long, requires = "compare")]
        census: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit the dense-coding table for one (state, subgroup, positions).
    Table {
        /// Builtin state name or state file path (not needed with
        /// --multiplication).
        #[arg(long)]
        state: Option<String>,
        /// Subgroup display label (e.g. G2^12) or file path.
        #[arg(long)]
        subgroup: String,
        /// Operated qubits, e.g. `1,2` (default: first valid position set).
        #[arg(long)]
        positions: Option<String>,
        /// Row order: canonical lex order or the published row order.
        #[arg(long, default_value = "canonical")]
        ordering: OrderingArg,
        /// Emit the group multiplication table instead of the coding table.
        #[arg(long)]
        multiplication: bool,
        /// Skip the orthogonality check (reproduces published tables that
        /// do not verify; decoding uniqueness is not guaranteed).
        #[arg(long)]
        unchecked: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Round-trip a classical bit message through encode/decode.
    Simulate {
        #[command(flatten)]
        state: StateArg,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        positions: Option<String>,
        /// Classical message; length must divide into t-bit chunks.
        #[arg(long)]
        bits: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct StateArg {
    /// Builtin state name (ghz3, ghz4, …, w3, w4, w1_4, w2_4, cluster4,
    /// cluster5, bell) or a path to a state file.
    #[arg(long)]
    state: String,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = TableFormat::Md)]
    format: TableFormat,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum OrderingArg {
    Canonical,
    Paper,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        // a panic means a violated internal invariant, not a user error
        Err(_) => ExitCode::from(4),
    }
}

fn run(cli: Cli) -> Result<()> {
    let labels = LabelBook::load()?;
    match cli.command {
        Command::Construct { qubits, out } => {
            let subs = construct_mgp_subgroups(qubits as usize);
            let text = render_subgroup_listing(&subs, qubits as usize, &labels, out.format)?;
            emit(&out, &text)
        }
        Command::Oracle { qubits, out } => {
            let text = render_oracle(qubits as usize, &labels, out.format)?;
            emit(&out, &text)
        }
        Command::Select { state, filter, compare, census, out } => {
            let (st, label) = resolve_state(&state.state)?;
            let text = if compare {
                let cmp = compare_methods(&st, &label, census, &labels)?;
                match out.format {
                    TableFormat::Json => cmp.to_json()?,
                    _ => cmp.to_markdown(),
                }
            } else {
                let report = select(&st, &label, filter, &labels)?;
                let rendered = match out.format {
                    TableFormat::Json => report.to_json()?,
                    _ => report.to_markdown(),
                };
                if let Some(failure) = &report.constraint_failure {
                    emit(&out, &rendered)?;
                    return Err(match failure {
                        densecode::select::ConstraintFailure::EvenItems { .. } => {
                            Error::Constraint1(failure.detail())
                        }
                        densecode::select::ConstraintFailure::OrthogonalProjections => {
                            Error::Constraint2(failure.detail())
                        }
                    });
                }
                rendered
            };
            emit(&out, &text)
        }
        Command::Table {
            state,
            subgroup,
            positions,
            ordering,
            multiplication,
            unchecked,
            out,
        } => {
            let sub = resolve_subgroup(&subgroup, &labels)?;
            let order = resolve_ordering(ordering, &sub, &labels)?;
            if multiplication {
                let text = emit_multiplication_table(&sub, &order, out.format)?;
                return emit(&out, &text);
            }
            let state = state.ok_or_else(|| Error::Usage("--state is required".into()))?;
            let (st, _) = resolve_state(&state)?;
            let pos = resolve_positions(positions.as_deref(), &st)?;
            let cb = if unchecked {
                Codebook::build_unchecked(&sub, &pos, &st, &order)?
            } else {
                Codebook::build(&sub, &pos, &st, &order)?
            };
            emit(&out, &cb.emit_table(out.format))
        }
        Command::Simulate { state, subgroup, positions, bits, out } => {
            let (st, _) = resolve_state(&state.state)?;
            let sub = resolve_subgroup(&subgroup, &labels)?;
            let pos = resolve_positions(positions.as_deref(), &st)?;
            let cb = Codebook::build(&sub, &pos, &st, &Ordering::Canonical)?;
            let transcript = cb.simulate_roundtrip(&bits)?;
            let text = match out.format {
                TableFormat::Json => transcript.to_json()?,
                _ => {
                    let mut text = String::new();
                    for c in &transcript.chunks {
                        let _ = writeln!(
                            text,
                            "{} -> U_{} = {} -> {} -> {}",
                            c.bits, c.index, c.operator, c.codeword, c.decoded
                        );
                    }
                    let _ = writeln!(
                        text,
                        "delivered {} bits over {} transmitted qubits: {}",
                        transcript.bits_delivered, transcript.qubits_sent, transcript.delivered
                    );
                    text
                }
            };
            emit(&out, &text)
        }
    }
}

fn emit(out: &OutputArgs, text: &str) -> Result<()> {
    match &out.out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn resolve_state(spec: &str) -> Result<(SymmetricState, String)> {
    if let Ok(s) = builtin_state(spec) {
        return Ok((s, spec.to_string()));
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        let s = SymmetricState::parse(&text)?;
        return Ok((s, spec.to_string()));
    }
    Err(Error::UnknownState(spec.to_string()))
}

fn resolve_subgroup(spec: &str, labels: &LabelBook) -> Result<Subgroup> {
    if let Ok(s) = labels.subgroup(spec) {
        return Ok(s);
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        if text.trim_start().starts_with('{') {
            // revalidate: closure and the canonical basis are invariants,
            // not trusted input
            let raw: Subgroup = serde_json::from_str(&text)?;
            return Subgroup::from_elements(raw.elements, raw.provenance);
        }
        return Subgroup::parse_text(&text);
    }
    Err(Error::UnknownLabel(spec.to_string()))
}

fn resolve_positions(spec: Option<&str>, state: &SymmetricState) -> Result<PositionSet> {
    match spec {
        Some(text) => {
            let indices: Vec<usize> = text
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Usage(format!("bad position `{p}`")))
                })
                .collect::<Result<_>>()?;
            let pos = PositionSet::new(indices, state.qubits())?;
            if !state.valid_position_sets().contains(&pos) {
                return Err(Error::Condition2(format!(
                    "operated qubits {pos} do not project the superposition items onto \
                     distinct bitstrings"
                )));
            }
            Ok(pos)
        }
        None => state
            .valid_position_sets()
            .into_iter()
            .next()
            .ok_or_else(|| Error::Condition2("state admits no valid position set".into())),
    }
}

fn resolve_ordering(arg: OrderingArg, sub: &Subgroup, labels: &LabelBook) -> Result<Ordering> {
    match arg {
        OrderingArg::Canonical => Ok(Ordering::Canonical),
        OrderingArg::Paper => match labels.paper_order(sub) {
            Some(rows) => Ok(Ordering::Explicit(rows.to_vec())),
            None => Err(Error::Usage(format!(
                "no published row order is shipped for subgroup `{}`",
                sub.canonical_key()
            ))),
        },
    }
}

fn render_subgroup_listing(
    subs: &[Subgroup],
    t: usize,
    labels: &LabelBook,
    format: TableFormat,
) -> Result<String> {
    match format {
        TableFormat::Json => {
            #[derive(serde::Serialize)]
            struct Row<'a> {
                key: String,
                labels: Vec<String>,
                n: usize,
                order: usize,
                s: Option<usize>,
                provenance: &'a densecode::Provenance,
                elements: Vec<String>,
            }
            let rows: Vec<Row> = subs
                .iter()
                .map(|s| Row {
                    key: s.canonical_key(),
                    labels: labels.labels_for(s),
                    n: s.n,
                    order: s.order,
                    s: s.provenance.s_value(),
                    provenance: &s.provenance,
                    elements: s.elements.iter().map(|e| e.to_compact()).collect(),
                })
                .collect();
            Ok(serde_json::to_string_pretty(&rows)?)
        }
        TableFormat::Csv => {
            let mut out = String::from("key,labels,s,order,elements\n");
            for s in subs {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    s.canonical_key(),
                    labels.labels_for(s).join("/"),
                    s.provenance.s_value().map(|v| v.to_string()).unwrap_or_default(),
                    s.order,
                    s.elements.iter().map(|e| e.to_compact()).collect::<Vec<_>>().join(" ")
                );
            }
            Ok(out)
        }
        TableFormat::Md => {
            let distinct = distinct_subgroups(subs);
            let mut out = format!(
                "# {} subgroups of order 2^{t} on {} qubits (λ = {}, {} distinct)\n",
                subs.len(),
                t.div_ceil(2),
                lambda_count(t),
                distinct.len()
            );
            for s in subs {
                let names = labels.labels_for(s);
                let name = if names.is_empty() { String::new() } else { format!("{} — ", names.join(" / ")) };
                let family = s
                    .provenance
                    .s_value()
                    .map(|v| format!(" [s = {v}]"))
                    .unwrap_or_default();
                let _ = writeln!(out, "\n## {name}`{}`{family}", s.canonical_key());
                let _ = writeln!(
                    out,
                    "{}",
                    s.elements.iter().map(|e| e.to_tensor()).collect::<Vec<_>>().join(", ")
                );
            }
            Ok(out)
        }
    }
}

fn render_oracle(t: usize, labels: &LabelBook, format: TableFormat) -> Result<String> {
    let n = t.div_ceil(2);
    let constructed = construct_mgp_subgroups(t);
    let distinct = distinct_subgroups(&constructed);
    let census = enumerate_all_subgroups(n, t);
    let have: BTreeSet<String> = distinct.iter().map(Subgroup::canonical_key).collect();
    let missing: Vec<&Subgroup> =
        census.iter().filter(|s| !have.contains(&s.canonical_key())).collect();
    let summary = format!(
        "constructed {} ({} distinct) / total {} / missing {}",
        constructed.len(),
        distinct.len(),
        census.len(),
        missing.len()
    );
    match format {
        TableFormat::Json => {
            #[derive(serde::Serialize)]
            struct Report {
                qubits: usize,
                arity: usize,
                constructed: usize,
                distinct: usize,
                census: usize,
                missing: usize,
                summary: String,
                missing_keys: Vec<String>,
            }
            Ok(serde_json::to_string_pretty(&Report {
                qubits: t,
                arity: n,
                constructed: constructed.len(),
                distinct: distinct.len(),
                census: census.len(),
                missing: missing.len(),
                summary,
                missing_keys: missing.iter().map(|s| s.canonical_key()).collect(),
            })?)
        }
        _ => {
            let mut out = format!("# Census audit for t={t} (arity {n})\n\n{summary}\n");
            if !missing.is_empty() {
                let _ = writeln!(out, "\n## Subgroups outside the construction ({})", missing.len());
                for s in &missing {
                    let names = labels.labels_for(s);
                    let name =
                        if names.is_empty() { String::new() } else { format!("{} — ", names.join(" / ")) };
                    let _ = writeln!(
                        out,
                        "- {name}`{}`: {}",
                        s.canonical_key(),
                        s.elements.iter().map(|e| e.to_compact()).collect::<Vec<_>>().join(" ")
                    );
                }
            }
            Ok(out)
        }
    }
}
