//! `nsgp`: numerical semigroups, linear patterns, and the numerical
//! duplication from the command line.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported on stderr),
//! 2 on a usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nsgp_core::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "nsgp", version, about = "Exact computations with numerical semigroups and linear patterns")]
struct Cli {
    /// Emit one JSON object instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a semigroup (`gen:3,5` or `gaps:1,2,4,7`)
    SgpInfo {
        #[arg(long)]
        sgp: String,
    },
    /// Degree, classification and standard decomposition of a pattern
    PatternInfo {
        #[arg(long)]
        pattern: String,
    },
    /// Decide whether a semigroup admits a pattern
    Admits {
        #[arg(long)]
        sgp: String,
        #[arg(long)]
        pattern: String,
        /// Force the exhaustive oracle instead of the structural shortcuts
        #[arg(long)]
        oracle: bool,
    },
    /// Test equivalence to the Arf pattern x1+x2-x3
    ArfEquiv {
        #[arg(long)]
        pattern: String,
    },
    /// Smallest semigroup containing the input that admits the pattern
    Closure {
        #[arg(long)]
        sgp: String,
        #[arg(long)]
        pattern: String,
    },
    /// Walk the tree of semigroups admitting the pattern, counting per genus
    Tree {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        genus_max: u64,
        /// Print one `gaps:` line per tree node instead of counts
        #[arg(long)]
        list: bool,
    },
    /// The numerical duplication 2·S ∪ (2·E + d)
    Duplicate {
        #[arg(long)]
        sgp: String,
        /// Ideal literal, `offset:3` or `igen:3,5`
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        d: u64,
    },
    /// The quotient S/k = { x : kx ∈ S }
    Quotient {
        #[arg(long)]
        sgp: String,
        #[arg(long)]
        k: u64,
    },
    /// Eventual admission of a pattern by the duplication for large d
    Eventual {
        #[arg(long)]
        sgp: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        pattern: String,
    },
    /// Per-d admission table of the duplication
    Dtable {
        #[arg(long)]
        sgp: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        pattern: String,
        /// Comma-separated odd members of S
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
        /// Emit `d=<n> admits=<bool>` lines
        #[arg(long)]
        machine: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    let json = cli.json;
    match cli.command {
        Command::SgpInfo { sgp } => {
            let s = parse_semigroup(&sgp).map_err(|e| e.to_string())?;
            print_semigroup("semigroup", &s, json);
        }
        Command::PatternInfo { pattern } => {
            let p = parse_pattern(&pattern)?;
            pattern_info(&p, json);
        }
        Command::Admits { sgp, pattern, oracle } => {
            let s = parse_semigroup(&sgp).map_err(|e| e.to_string())?;
            let p = parse_pattern(&pattern)?;
            let decision = if oracle { admits_oracle(&s, &p) } else { admits(&s, &p) };
            let value = decision
                .counterexample
                .as_ref()
                .map(|tuple| eval_pattern(&p, tuple).expect("witness tuples are sorted"));
            if json {
                emit(json!({
                    "admits": decision.admits,
                    "method": method_name(decision.method),
                    "counterexample": decision.counterexample,
                    "counterexample_value": value,
                }));
            } else {
                println!("admits: {}", decision.admits);
                println!("method: {}", method_name(decision.method));
                if let (Some(tuple), Some(value)) = (&decision.counterexample, value) {
                    println!("counterexample: {} -> {value}", format_tuple(tuple));
                }
            }
        }
        Command::ArfEquiv { pattern } => {
            let p = parse_pattern(&pattern)?;
            let equivalent = is_arf_equivalent(&p);
            if json {
                emit(json!({ "arf_equivalent": equivalent }));
            } else {
                println!("arf-equivalent: {equivalent}");
            }
        }
        Command::Closure { sgp, pattern } => {
            let s = parse_semigroup(&sgp).map_err(|e| e.to_string())?;
            let p = parse_pattern(&pattern)?;
            let closed = p_closure(&s, &p).map_err(|e| e.to_string())?;
            print_semigroup("closure", &closed, json);
        }
        Command::Tree { pattern, genus_max, list } => {
            let p = parse_pattern(&pattern)?;
            let cap = genus_cap()?;
            if list {
                let mut nodes = Vec::new();
                walk_tree(&p, genus_max, cap, |node| {
                    nodes.push(gaps_literal(&node.semigroup));
                })
                .map_err(|e| e.to_string())?;
                if json {
                    emit(json!({ "nodes": nodes }));
                } else {
                    for line in nodes {
                        println!("{line}");
                    }
                }
            } else {
                let counts = enumerate_by_genus_capped(&p, genus_max, cap).map_err(|e| e.to_string())?;
                if json {
                    emit(json!({ "counts": counts, "total": counts.iter().sum::<u64>() }));
                } else {
                    for (genus, count) in counts.iter().enumerate() {
                        println!("genus {genus}: {count}");
                    }
                    println!("total: {}", counts.iter().sum::<u64>());
                }
            }
        }
        Command::Duplicate { sgp, ideal, d } => {
            let s = parse_semigroup(&sgp).map_err(|e| e.to_string())?;
            let e = parse_ideal(&s, &ideal).map_err(|e| e.to_string())?;
            let dup = e.duplication(d).map_err(|e| e.to_string())?;
            print_semigroup("duplication", &dup, json);
        }
        Command::Quotient { sgp, k } => {
            if k == 0 {
                return Err("quotient divisor must be at least 1".into());
            }
            let s = parse_semigroup(&sgp).map_err(|e| e.to_string())?;
            print_semigroup("quotient", &s.quotient(k), json);
        }
        Command::Eventual { sgp, ideal, pattern } => {
            let s = parse_semigroup(&sgp).map_err(|e| e.to_string())?;
            let e = parse_ideal(&s, &ideal).map_err(|e| e.to_string())?;
            let p = parse_pattern(&pattern)?;
            eventual(&e, &p, json)?;
        }
        Command::Dtable { sgp, ideal, pattern, d, machine } => {
            let s = parse_semigroup(&sgp).map_err(|e| e.to_string())?;
            let e = parse_ideal(&s, &ideal).map_err(|e| e.to_string())?;
            let p = parse_pattern(&pattern)?;
            let table = d_table(&e, &p, &d).map_err(|e| e.to_string())?;
            if json {
                let rows: Vec<_> = table
                    .rows
                    .iter()
                    .map(|&(d, admits)| json!({ "d": d, "admits": admits }))
                    .collect();
                emit(json!({ "pattern": p.to_string(), "rows": rows }));
            } else if machine {
                print!("{}", table.machine_lines());
            } else {
                print!("{table}");
            }
        }
    }
    Ok(())
}

fn parse_pattern(text: &str) -> Result<Pattern, String> {
    text.parse::<Pattern>().map_err(|e| e.to_string())
}

fn genus_cap() -> Result<u64, String> {
    match std::env::var("NSGP_GENUS_CAP") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| format!("NSGP_GENUS_CAP must be a number, found `{raw}`")),
        Err(_) => Ok(DEFAULT_GENUS_CAP),
    }
}

fn emit(value: serde_json::Value) {
    println!("{value}");
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Oracle => "oracle",
        Method::ConductorBound => "conductor_bound",
        Method::Ad1Structure => "ad1_structure",
        Method::Ad2MonicStructure => "ad2_monic_structure",
    }
}

fn case_name(case: EventualCase) -> &'static str {
    match case {
        EventualCase::Ad1RequiresN => "ad1_requires_N",
        EventualCase::Ad2Monic => "ad2_monic",
        EventualCase::Ad3Monic => "ad3_monic",
        EventualCase::Ad3Nonmonic => "ad3_nonmonic",
        EventualCase::RefutedNecessary => "refuted_necessary",
    }
}

fn format_tuple(tuple: &[u64]) -> String {
    let parts: Vec<String> = tuple.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

fn format_list(values: &[u64]) -> String {
    let parts: Vec<String> = values.iter().map(u64::to_string).collect();
    parts.join(",")
}

fn degree_json(degree: AdmissibilityDegree) -> serde_json::Value {
    match degree {
        AdmissibilityDegree::Finite(d) => json!(d),
        AdmissibilityDegree::Infinite => json!("infinity"),
    }
}

fn print_semigroup(label: &str, s: &NumericalSemigroup, json: bool) {
    let inv = s.invariants();
    if json {
        emit(json!({
            label: s.to_string(),
            "multiplicity": inv.multiplicity,
            "conductor": inv.conductor,
            "frobenius": inv.frobenius,
            "genus": inv.genus,
            "gaps": inv.gaps,
            "minimal_generators": inv.minimal_generators,
        }));
    } else {
        println!("{label}: {s}");
        println!("multiplicity: {}", inv.multiplicity);
        println!("conductor: {}", inv.conductor);
        println!("frobenius: {}", inv.frobenius);
        println!("genus: {}", inv.genus);
        println!("gaps: {}", format_list(&inv.gaps));
        println!("minimal generators: {}", format_list(&inv.minimal_generators));
    }
}

/// Renders a pattern whose first variable is `x<start>` in the original
/// numbering (decomposition blocks keep their position in the pattern).
fn format_with_offset(p: &Pattern, start: usize) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, &a) in p.coefficients().iter().enumerate() {
        if a < 0 {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let mag = a.unsigned_abs();
        if mag != 1 {
            out.push_str(&mag.to_string());
        }
        out.push_str(&format!("x{}", start + i));
    }
    out
}

fn pattern_info(p: &Pattern, json: bool) {
    let class = p.classify();
    let degree = p.admissibility_degree();
    let sums: Vec<i64> = p.prefix_sums();
    let decomposition = p.standard_decomposition().ok();
    if json {
        let mut object = json!({
            "pattern": p.to_string(),
            "prefix_sums": sums,
            "admissible": class.admissible,
            "strongly_admissible": class.strongly_admissible,
            "admissibility_degree": degree_json(degree),
        });
        if let Some(dec) = &decomposition {
            object["head"] = json!(dec.head().to_string());
            object["center"] = json!(format_with_offset(dec.center(), dec.center_start().unwrap_or(dec.h() + 1)));
            object["tail"] = json!(format_with_offset(dec.tail(), dec.t() + 1));
            object["h"] = json!(dec.h());
            object["t"] = json!(dec.t());
        }
        emit(object);
    } else {
        println!("pattern: {p}");
        let sums_text: Vec<String> = sums.iter().map(i64::to_string).collect();
        println!("prefix sums: {}", sums_text.join(","));
        println!("admissible: {}", class.admissible);
        println!("strongly admissible: {}", class.strongly_admissible);
        println!("admissibility degree: {degree}");
        if let Some(dec) = &decomposition {
            println!("head: {} (h={})", dec.head(), dec.h());
            println!(
                "center: {} (t={})",
                format_with_offset(dec.center(), dec.center_start().unwrap_or(dec.h() + 1)),
                dec.t()
            );
            println!("tail: {}", format_with_offset(dec.tail(), dec.t() + 1));
        }
    }
}

fn eventual(e: &SemigroupIdeal, p: &Pattern, json: bool) -> Result<(), String> {
    let monic = p.is_monic();
    if monic {
        let decision = eventually_admits(e, p).map_err(|err| err.to_string())?;
        report_eventual(p, &decision, json);
    } else {
        match nonmonic_eventual(e, p).map_err(|err| err.to_string())? {
            NonmonicEventual::Decided(decision) => report_eventual(p, &decision, json),
            NonmonicEventual::NecessaryOnly(conditions) => {
                if json {
                    emit(json!({
                        "pattern": p.to_string(),
                        "eventually_admits": serde_json::Value::Null,
                        "necessary_conditions_pass": conditions.passes,
                        "note": "no sufficient condition for non-monic degree 2",
                    }));
                } else {
                    println!("pattern: {p} (non-monic, ad={})", p.admissibility_degree());
                    println!("eventually admits: undecided (necessary conditions hold; no sufficient test for non-monic degree 2)");
                }
            }
            NonmonicEventual::Unresolved => {
                if json {
                    emit(json!({
                        "pattern": p.to_string(),
                        "eventually_admits": serde_json::Value::Null,
                        "note": "non-monic degree 1 is outside the decided cases",
                    }));
                } else {
                    println!("pattern: {p} (non-monic, ad={})", p.admissibility_degree());
                    println!("eventually admits: undecided (non-monic degree 1 is outside the decided cases)");
                }
            }
        }
    }
    Ok(())
}

fn report_eventual(p: &Pattern, decision: &EventualDecision, json: bool) {
    if json {
        emit(json!({
            "pattern": p.to_string(),
            "eventually_admits": decision.eventually_admits,
            "case": case_name(decision.case),
            "threshold_d": decision.threshold_d,
            "failing_condition": decision.failing_condition,
        }));
    } else {
        let kind = if p.is_monic() { "monic" } else { "non-monic" };
        println!("pattern: {p} ({kind}, ad={})", p.admissibility_degree());
        println!("eventually admits: {}", decision.eventually_admits);
        println!("case: {}", case_name(decision.case));
        if let Some(threshold) = decision.threshold_d {
            println!("threshold d: {threshold}");
        }
        if let Some(reason) = &decision.failing_condition {
            println!("failing condition: {reason}");
        }
    }
}
