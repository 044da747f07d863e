use std::fmt::Write;

use serde_json::{json, Value};
use trefoil_tight::atlas::{slopes_in, VerdictRecord};
use trefoil_tight::*;

use crate::{Cli, Command, DotTarget, Format};

pub struct Report {
    pub text: String,
    pub not_covered: bool,
}

pub enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

type Out = std::result::Result<Report, Failure>;

fn plain(text: String) -> Out {
    Ok(Report { text, not_covered: false })
}

fn json_line(v: &Value) -> String {
    format!("{v}\n")
}

fn unsupported(cmd: &str, format: Format) -> Failure {
    Failure::Usage(format!("format {format:?} is not available for `{cmd}`").to_lowercase())
}

/// The `minus` list of the JSON schema, which leads with the unsigned edge.
fn minus_list(p: &ShuffleClass) -> String {
    serde_json::to_value(p).expect("class serializes")["minus"].to_string()
}

fn slope_list(v: &[Slope]) -> String {
    let items: Vec<String> = v.iter().map(Slope::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn run(cli: &Cli) -> Out {
    let f = cli.format;
    match &cli.command {
        Command::Phi { r } => {
            let v = phi(*r)?;
            match f {
                Format::Text | Format::Tsv => plain(format!("{v}\n")),
                Format::Json => plain(json_line(&json!({ "r": r, "phi": v }))),
                Format::Dot => Err(unsupported("phi", f)),
            }
        }
        Command::Cf { x } => {
            let cf = cf_minus(*x)?;
            match f {
                Format::Text => plain(format!("{cf}\n")),
                Format::Tsv => plain(format!("{}\n", cf.entries().iter().map(i64::to_string).collect::<Vec<_>>().join("\t"))),
                Format::Json => plain(json_line(&json!({ "x": x, "cf": cf.entries() }))),
                Format::Dot => Err(unsupported("cf", f)),
            }
        }
        Command::Path { a, b } => {
            let p = minimal_path(*a, *b)?;
            match f {
                Format::Text => plain(format!("{p}\n")),
                Format::Tsv => plain(p.vertices().iter().map(|v| format!("{v}\n")).collect()),
                Format::Json => plain(json_line(&serde_json::to_value(&p).expect("path serializes"))),
                Format::Dot => plain(path_dot(&p)),
            }
        }
        Command::CableSlope { p, q, sign } => {
            let s = cable_surgery_slope(*p, *q, *sign)?;
            match f {
                Format::Text | Format::Tsv => plain(format!("{s}\n")),
                Format::Json => plain(json_line(&json!({ "p": p, "q": q, "sign": sign, "slope": s }))),
                Format::Dot => Err(unsupported("cable-slope", f)),
            }
        }
        Command::CableMap { p, q, sign } => {
            let m = reglue_map(*p, *q, *sign)?;
            match f {
                Format::Text => plain(format!("{m}\n")),
                Format::Tsv => {
                    let [[a, b], [c, d]] = m.entries();
                    plain(format!("{a}\t{b}\n{c}\t{d}\n"))
                }
                Format::Json => plain(json_line(&serde_json::to_value(m).expect("matrix serializes"))),
                Format::Dot => Err(unsupported("cable-map", f)),
            }
        }
        Command::Count { r, s } => {
            let n = count_tight(*r, *s)?;
            match f {
                Format::Text | Format::Tsv => plain(format!("{n}\n")),
                Format::Json => plain(json_line(&json!({ "r": r, "s": s, "count": n }))),
                Format::Dot => Err(unsupported("count", f)),
            }
        }
        Command::Enumerate { r } => enumerate(cli, *r),
        Command::Classify { r, k, l } => classify_all(f, *r, *k, *l),
        Command::Summary { r } => summary(f, *r),
        Command::Sweep => sweep_rows(cli),
        Command::Dot { what } => match what {
            DotTarget::Path { a, b } => plain(path_dot(&minimal_path(*a, *b)?)),
            DotTarget::Triangle { r } => triangle_dot(*r),
        },
    }
}

fn enumerate(cli: &Cli, r: Slope) -> Out {
    let ids = enumerate_structures(r)?;
    let mode = cli.mode();
    let mut rows = Vec::with_capacity(ids.len());
    for id in &ids {
        let mut tori = Vec::new();
        for t in mixed_tori(id) {
            tori.push((t, exceptional_slopes(&t, mode)?));
        }
        rows.push((id, triangle_position(id), tori));
    }
    match cli.format {
        Format::Text => {
            let mut out = String::new();
            for (id, pos, tori) in &rows {
                writeln!(out, "k={} l={} P={} {pos}", id.k(), id.l(), minus_list(id.p())).unwrap();
                for (t, e) in tori {
                    writeln!(out, "  mixed torus {} ({}, {}) E = {}", t.s0, t.s_neg1, t.s1, slope_list(e)).unwrap();
                }
            }
            plain(out)
        }
        Format::Tsv => {
            let mut out = String::from("k\tl\tminus\tposition\tmixed_tori\n");
            for (id, pos, tori) in &rows {
                let s0: Vec<String> = tori.iter().map(|(t, _)| t.s0.to_string()).collect();
                writeln!(out, "{}\t{}\t{}\t{pos}\t{}", id.k(), id.l(), minus_list(id.p()), s0.join(",")).unwrap();
            }
            plain(out)
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(id, pos, tori)| {
                    let tori: Vec<Value> = tori
                        .iter()
                        .map(|(t, e)| json!({ "s0": t.s0, "s1": t.s1, "s_neg1": t.s_neg1, "exceptional": e }))
                        .collect();
                    json!({ "r": r, "k": id.k(), "l": id.l(), "P": id.p(), "position": pos.tag(), "mixed_tori": tori })
                })
                .collect();
            plain(json_line(&Value::Array(items)))
        }
        Format::Dot => Err(unsupported("enumerate", cli.format)),
    }
}

fn classify_all(f: Format, r: Slope, k: Option<i64>, l: Option<i64>) -> Out {
    let records: Vec<VerdictRecord> = enumerate_structures(r)?
        .iter()
        .filter(|id| k.is_none_or(|k| id.k() == k) && l.is_none_or(|l| id.l() == l))
        .map(VerdictRecord::new)
        .collect();
    let not_covered = records.iter().any(|v| v.status == Fillability::NotCovered);
    let text = match f {
        Format::Text => {
            let mut out = String::new();
            for v in &records {
                let pos = match v.side {
                    Some(SideEdge::Low) => "Side(low)".to_string(),
                    Some(SideEdge::High) => "Side(high)".to_string(),
                    None => v.position.to_string(),
                };
                write!(out, "k={} l={} P={} {pos} {}", v.k, v.l, minus_list(&v.p), v.status).unwrap();
                if let Some(c) = v.citation {
                    write!(out, " [{c}]").unwrap();
                }
                if let Some(n) = &v.note {
                    write!(out, " ({n})").unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Tsv => {
            let mut out = String::from("r\tk\tl\tminus\tposition\tstatus\tcite\n");
            for v in &records {
                let cite = v.citation.map(|c| c.to_string()).unwrap_or_default();
                writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}\t{cite}", v.r, v.k, v.l, minus_list(&v.p), v.position, v.status)
                    .unwrap();
            }
            out
        }
        Format::Json => json_line(&serde_json::to_value(&records).expect("records serialize")),
        Format::Dot => return Err(unsupported("classify", f)),
    };
    Ok(Report { text, not_covered })
}

const STATUSES: [(Fillability, &str); 4] = [
    (Fillability::Stein, "stein"),
    (Fillability::StrongNotExact, "strong_not_exact"),
    (Fillability::StrongSteinConditional, "strong_stein_conditional"),
    (Fillability::NotCovered, "not_covered"),
];

fn summary(f: Format, r: Slope) -> Out {
    let s = verdict_summary(r)?;
    let text = match f {
        Format::Text | Format::Tsv => {
            let sep = if f == Format::Tsv { "\t" } else { " " };
            let mut out = format!("total{sep}{}\n", s.total);
            for (status, key) in STATUSES {
                if s.count(status) > 0 {
                    writeln!(out, "{key}{sep}{}", s.count(status)).unwrap();
                }
            }
            out
        }
        Format::Json => json_line(&serde_json::to_value(s).expect("summary serializes")),
        Format::Dot => return Err(unsupported("summary", f)),
    };
    Ok(Report { text, not_covered: s.not_covered > 0 })
}

fn sweep_rows(cli: &Cli) -> Out {
    let (lo, hi) = match cli.interval.as_deref() {
        Some([a, b]) => (*a, *b),
        _ => (Slope::ZERO, Slope::ONE),
    };
    if cli.bound < 2 {
        return Err(Failure::Usage(format!("--bound must be at least 2, got {}", cli.bound)));
    }
    let rows = sweep(lo, hi, cli.bound)?;
    debug_assert_eq!(rows.len(), slopes_in(lo, hi, cli.bound).len());
    let not_covered = rows.iter().any(|row| row.summary.not_covered > 0);
    let text = match cli.format {
        Format::Text => {
            let mut out = String::new();
            for row in &rows {
                write!(out, "{} n={} phi={} total={}", row.r, row.n, row.phi, row.summary.total).unwrap();
                for (status, key) in STATUSES {
                    if row.summary.count(status) > 0 {
                        write!(out, " {key}={}", row.summary.count(status)).unwrap();
                    }
                }
                out.push('\n');
            }
            out
        }
        Format::Tsv => {
            let mut out = String::from("r\tn\tphi\ttotal");
            for (_, key) in STATUSES {
                write!(out, "\t{key}").unwrap();
            }
            out.push('\n');
            for row in &rows {
                write!(out, "{}\t{}\t{}\t{}", row.r, row.n, row.phi, row.summary.total).unwrap();
                for (status, _) in STATUSES {
                    write!(out, "\t{}", row.summary.count(status)).unwrap();
                }
                out.push('\n');
            }
            out
        }
        Format::Json => json_line(&serde_json::to_value(&rows).expect("rows serialize")),
        Format::Dot => return Err(unsupported("sweep", cli.format)),
    };
    Ok(Report { text, not_covered })
}

fn path_dot(p: &FareyPath) -> String {
    let mut out = String::from("digraph path {\n  rankdir=LR;\n  node [shape=circle];\n");
    for (i, v) in p.vertices().iter().enumerate() {
        writeln!(out, "  v{i} [label=\"{v}\"];").unwrap();
    }
    for i in 0..p.edge_count() {
        writeln!(out, "  v{i} -> v{};", i + 1).unwrap();
    }
    out.push_str("}\n");
    out
}

fn colour(status: Fillability) -> &'static str {
    match status {
        Fillability::Stein => "palegreen",
        Fillability::StrongNotExact => "salmon",
        Fillability::StrongSteinConditional => "khaki",
        Fillability::NotCovered => "lightgrey",
    }
}

fn triangle_dot(r: Slope) -> Out {
    let n = n_of(r)?;
    let ids = enumerate_structures(r)?;
    let mut not_covered = false;
    let mut out = format!("digraph triangle {{\n  label=\"r = {r}\";\n  node [shape=box, style=filled];\n");
    for k in (1..=n).rev() {
        out.push_str("  { rank=same;");
        for l in 0..=n - k {
            write!(out, " x{k}_{l};").unwrap();
        }
        out.push_str(" }\n");
    }
    for k in 1..=n {
        for l in 0..=n - k {
            let mut counts = [0u64; 4];
            for id in ids.iter().filter(|id| id.k() == k && id.l() == l) {
                let status = classify(id).status;
                counts[STATUSES.iter().position(|(s, _)| *s == status).unwrap()] += 1;
            }
            not_covered |= counts[3] > 0;
            let present: Vec<usize> = (0..4).filter(|&i| counts[i] > 0).collect();
            let fill = match present.as_slice() {
                [i] => colour(STATUSES[*i].0),
                _ => "lightblue",
            };
            let tally: Vec<String> = present.iter().map(|&i| format!("{} {}", STATUSES[i].1, counts[i])).collect();
            writeln!(out, "  x{k}_{l} [label=\"k={k} l={l}\\n{}\", fillcolor={fill}];", tally.join("\\n")).unwrap();
        }
    }
    for k in 2..=n {
        for l in 0..=n - k {
            writeln!(out, "  x{k}_{l} -> x{}_{l};", k - 1).unwrap();
            writeln!(out, "  x{k}_{l} -> x{}_{};", k - 1, l + 1).unwrap();
        }
    }
    out.push_str("}\n");
    Ok(Report { text: out, not_covered })
}
