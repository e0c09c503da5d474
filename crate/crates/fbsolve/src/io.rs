//! Instance file format.
//!
//! Line-oriented, `#` starts a comment line. Vertices are 1-based in
//! files (0-based in memory). Grammar:
//!
//! ```text
//! p ud <n> <m>          undirected graph header
//! p dir <n> <m>         directed graph header
//! p shs <d> <s>         hitting-set header: universe 1..=d, s sets
//! e <u> <v>             edge (ud) or arc u -> v (dir), m lines
//! s <elements...>       one hitting-set line per set, s lines
//! a wc <id>             distinguished vertex
//! a k <int>             deletion budget
//! a d <int>             degree bound
//! a forbid <ids...>     forbidden vertices (feedback-set search)
//! a unrem <ids...>      unremovable vertices (annotated BDD)
//! ```
//!
//! Parsing is strict: counts must match the header, ids must be in
//! range, self-loops and duplicate edges are rejected — all with the
//! offending line number. Serialization is canonical (sorted edge
//! lists, fixed annotation order), so writing a parsed file reproduces
//! it byte-for-byte modulo comments.

use std::fmt;

use fbsolve_core::graph::{DirectedGraph, UndirectedGraph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Optional instance annotations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Annotations {
    pub wc: Option<VertexId>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub forbid: Option<VertexSet>,
    pub unrem: Option<VertexSet>,
}

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Undirected { g: UndirectedGraph, ann: Annotations },
    Directed { g: DirectedGraph, ann: Annotations },
    HittingSet { universe: usize, sets: Vec<Vec<usize>>, ann: Annotations },
}

impl Instance {
    pub fn annotations(&self) -> &Annotations {
        match self {
            Instance::Undirected { ann, .. }
            | Instance::Directed { ann, .. }
            | Instance::HittingSet { ann, .. } => ann,
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn parse_num(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| err(line, format!("invalid {what}: {tok:?}")))
}

fn parse_vertex(tok: &str, line: usize, n: usize) -> Result<usize, ParseError> {
    let v = parse_num(tok, line, "vertex id")?;
    if v == 0 || v > n {
        return Err(err(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Parses the canonical instance format from a string.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    enum Kind {
        Ud,
        Dir,
        Shs,
    }
    let mut kind: Option<(Kind, usize, usize, usize)> = None; // kind, n/d, m/s, header line
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let mut ann = Annotations::default();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if kind.is_some() {
                    return Err(err(lineno, "duplicate header line"));
                }
                if toks.len() != 4 {
                    return Err(err(lineno, "header needs: p <ud|dir|shs> <n> <m>"));
                }
                let k = match toks[1] {
                    "ud" => Kind::Ud,
                    "dir" => Kind::Dir,
                    "shs" => Kind::Shs,
                    other => return Err(err(lineno, format!("unknown instance kind {other:?}"))),
                };
                let a = parse_num(toks[2], lineno, "count")?;
                let b = parse_num(toks[3], lineno, "count")?;
                kind = Some((k, a, b, lineno));
            }
            "e" => {
                let Some((k, n, _, _)) = &kind else {
                    return Err(err(lineno, "edge before header"));
                };
                if toks.len() != 3 {
                    return Err(err(lineno, "edge needs: e <u> <v>"));
                }
                let u = parse_vertex(toks[1], lineno, *n)?;
                let v = parse_vertex(toks[2], lineno, *n)?;
                if u == v {
                    return Err(err(lineno, format!("self-loop at vertex {}", u + 1)));
                }
                let key = match k {
                    Kind::Ud => (u.min(v), u.max(v)),
                    Kind::Dir => (u, v),
                    Kind::Shs => return Err(err(lineno, "edge line in a hitting-set file")),
                };
                if !seen.insert(key) {
                    return Err(err(lineno, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                edges.push((u, v));
            }
            "s" => {
                let Some((Kind::Shs, d, _, _)) = &kind else {
                    return Err(err(lineno, "set line outside a hitting-set file"));
                };
                if toks.len() < 2 {
                    return Err(err(lineno, "set line needs at least one element"));
                }
                let mut elems = Vec::new();
                for t in &toks[1..] {
                    let e = parse_num(t, lineno, "set element")?;
                    if e == 0 || e > *d {
                        return Err(err(lineno, format!("element {e} outside universe 1..={d}")));
                    }
                    elems.push(e);
                }
                sets.push(elems);
            }
            "a" => {
                let Some((_, n, _, _)) = &kind else {
                    return Err(err(lineno, "annotation before header"));
                };
                if toks.len() < 3 {
                    return Err(err(lineno, "annotation needs: a <key> <value...>"));
                }
                match toks[1] {
                    "wc" => {
                        ann.wc = Some(VertexId::new(parse_vertex(toks[2], lineno, *n)?));
                    }
                    "k" => ann.k = Some(parse_num(toks[2], lineno, "budget")?),
                    "d" => ann.d = Some(parse_num(toks[2], lineno, "degree bound")?),
                    "forbid" | "unrem" => {
                        let mut ids = Vec::new();
                        for t in &toks[2..] {
                            ids.push(VertexId::new(parse_vertex(t, lineno, *n)?));
                        }
                        let set = VertexSet::from_vec(ids);
                        if toks[1] == "forbid" {
                            ann.forbid = Some(set);
                        } else {
                            ann.unrem = Some(set);
                        }
                    }
                    other => return Err(err(lineno, format!("unknown annotation {other:?}"))),
                }
            }
            other => return Err(err(lineno, format!("unknown line tag {other:?}"))),
        }
    }

    let Some((k, n, m, header_line)) = kind else {
        return Err(err(0, "missing header line"));
    };
    match k {
        Kind::Ud => {
            if edges.len() != m {
                return Err(err(header_line, format!("expected {m} edges, found {}", edges.len())));
            }
            let g = UndirectedGraph::new(n, &edges)
                .map_err(|e| err(header_line, format!("{e}")))?;
            Ok(Instance::Undirected { g, ann })
        }
        Kind::Dir => {
            if edges.len() != m {
                return Err(err(header_line, format!("expected {m} arcs, found {}", edges.len())));
            }
            let g =
                DirectedGraph::new(n, &edges).map_err(|e| err(header_line, format!("{e}")))?;
            Ok(Instance::Directed { g, ann })
        }
        Kind::Shs => {
            if sets.len() != m {
                return Err(err(header_line, format!("expected {m} sets, found {}", sets.len())));
            }
            Ok(Instance::HittingSet { universe: n, sets, ann })
        }
    }
}

fn write_annotations(out: &mut String, ann: &Annotations) {
    use std::fmt::Write;
    if let Some(wc) = ann.wc {
        writeln!(out, "a wc {}", wc.index() + 1).unwrap();
    }
    if let Some(k) = ann.k {
        writeln!(out, "a k {k}").unwrap();
    }
    if let Some(d) = ann.d {
        writeln!(out, "a d {d}").unwrap();
    }
    for (key, set) in [("forbid", &ann.forbid), ("unrem", &ann.unrem)] {
        if let Some(set) = set {
            let ids: Vec<String> = set.iter().map(|v| (v.index() + 1).to_string()).collect();
            writeln!(out, "a {key} {}", ids.join(" ")).unwrap();
        }
    }
}

/// Serializes an instance canonically (see module docs).
pub fn write_instance(inst: &Instance) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    match inst {
        Instance::Undirected { g, ann } => {
            writeln!(out, "p ud {} {}", g.vertex_count(), g.edge_count()).unwrap();
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u.index() + 1, v.index() + 1).unwrap();
            }
            write_annotations(&mut out, ann);
        }
        Instance::Directed { g, ann } => {
            writeln!(out, "p dir {} {}", g.vertex_count(), g.arc_count()).unwrap();
            for (u, v) in g.arcs() {
                writeln!(out, "e {} {}", u.index() + 1, v.index() + 1).unwrap();
            }
            write_annotations(&mut out, ann);
        }
        Instance::HittingSet { universe, sets, ann } => {
            writeln!(out, "p shs {universe} {}", sets.len()).unwrap();
            for s in sets {
                let elems: Vec<String> = s.iter().map(|e| e.to_string()).collect();
                writeln!(out, "s {}", elems.join(" ")).unwrap();
            }
            write_annotations(&mut out, ann);
        }
    }
    out
}

/// Serializes a reduction output: the instance followed by legend
/// comments describing each gadget role.
pub fn write_reduction(out: &fbsolve_core::reduce::ReductionOutput) -> String {
    use fbsolve_core::reduce::ReducedInstance;
    use std::fmt::Write;
    let mut text = String::new();
    writeln!(text, "# {}", out.parameter_note).unwrap();
    for (role, set) in &out.legend {
        let ids: Vec<String> = set.iter().map(|v| (v.index() + 1).to_string()).collect();
        writeln!(text, "# legend {} {}", role, ids.join(" ")).unwrap();
    }
    let body = match &out.instance {
        ReducedInstance::Mid(inst) => write_instance(&Instance::Directed {
            g: inst.g.clone(),
            ann: Annotations {
                wc: Some(inst.w_c),
                k: Some(inst.k),
                ..Default::default()
            },
        }),
        ReducedInstance::Mdd(inst) => write_instance(&Instance::Undirected {
            g: inst.g.clone(),
            ann: Annotations {
                wc: Some(inst.w_c),
                k: Some(inst.k),
                ..Default::default()
            },
        }),
    };
    text.push_str(&body);
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_byte_identical_modulo_comments() {
        let text = "# a comment\np ud 4 3\ne 1 2\ne 1 3\ne 2 4\na wc 1\na k 2\n";
        let inst = parse_instance(text).unwrap();
        let written = write_instance(&inst);
        let stripped: String =
            text.lines().filter(|l| !l.trim_start().starts_with('#')).map(|l| format!("{l}\n")).collect();
        assert_eq!(written, stripped);
        assert_eq!(parse_instance(&written).unwrap(), inst);
    }

    #[test]
    fn parses_directed_and_hitting_set() {
        let inst = parse_instance("p dir 3 2\ne 1 2\ne 3 1\na wc 2\n").unwrap();
        let Instance::Directed { g, ann } = &inst else { panic!() };
        assert_eq!(g.arc_count(), 2);
        assert_eq!(ann.wc, Some(VertexId(1)));

        let inst = parse_instance("p shs 3 2\ns 1 2\ns 3\na k 1\n").unwrap();
        let Instance::HittingSet { universe, sets, ann } = &inst else { panic!() };
        assert_eq!(*universe, 3);
        assert_eq!(sets.len(), 2);
        assert_eq!(ann.k, Some(1));
    }

    #[test]
    fn reports_errors_with_line_numbers() {
        // Self-loop.
        let e = parse_instance("p ud 3 1\ne 3 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));

        // Duplicate edge (also reversed).
        let e = parse_instance("p ud 3 2\ne 1 2\ne 2 1\n").unwrap_err();
        assert_eq!(e.line, 3);

        // Count mismatch points at the header.
        let e = parse_instance("p ud 3 2\ne 1 2\n").unwrap_err();
        assert_eq!(e.line, 1);

        // Out-of-range vertex.
        let e = parse_instance("p ud 2 1\ne 1 5\n").unwrap_err();
        assert_eq!(e.line, 2);

        // Unknown tag.
        let e = parse_instance("p ud 1 0\nq nonsense\n").unwrap_err();
        assert_eq!(e.line, 2);

        // Missing header.
        assert!(parse_instance("e 1 2\n").is_err());
    }

    #[test]
    fn annotations_round_trip() {
        let text = "p ud 5 2\ne 1 2\ne 4 5\na wc 3\na k 1\na d 2\na forbid 1 4\na unrem 2 5\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(write_instance(&inst), text);
    }
}
