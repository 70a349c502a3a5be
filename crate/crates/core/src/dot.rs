//! Graphviz rendering of `Γ_D` and of Euler-class assignments.
//!
//! Layout follows the usual picture: sources on the top row, destinations on
//! the bottom row. Vertices and parallel edges are emitted in numeric order
//! so output is reproducible byte for byte.

use std::fmt::Write;

use crate::basis::BasisMatrix;
use crate::multiplication::EulerClass;

fn row(out: &mut String, prefix: &str, label: &str, n: usize) {
    let _ = writeln!(out, "  {{ rank = same;");
    for v in 1..=n {
        let _ = writeln!(out, "    {prefix}{v} [label=\"{v}\", xlabel=\"{label}\"];");
    }
    let _ = writeln!(out, "  }}");
}

fn chain(out: &mut String, prefix_a: &str, prefix_b: &str, n: usize) {
    // invisible edges keep each row in numeric order
    if n > 1 {
        let a = (1..=n).map(|v| format!("{prefix_a}{v}")).collect::<Vec<_>>().join(" -> ");
        let b = (1..=n).map(|v| format!("{prefix_b}{v}")).collect::<Vec<_>>().join(" -> ");
        let _ = writeln!(out, "  {a} [style=invis];");
        let _ = writeln!(out, "  {b} [style=invis];");
    }
}

/// `Γ_D` with one edge per unit of `d_ij`, from source `s{j}` to destination `t{i}`.
pub fn multigraph(m: &BasisMatrix) -> String {
    let n = m.n();
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{m}\" {{");
    let _ = writeln!(out, "  rankdir=TB;");
    let _ = writeln!(out, "  node [shape=circle];");
    let _ = writeln!(out, "  edge [arrowhead=none];");
    row(&mut out, "s", "source", n);
    row(&mut out, "t", "destination", n);
    let _ = writeln!(out, "  {{ edge [style=invis]; s1 -> t1; }}");
    chain(&mut out, "s", "t", n);
    for j in 0..n {
        for i in 0..n {
            for _ in 0..m.get(i, j) {
                let _ = writeln!(out, "  s{} -> t{};", j + 1, i + 1);
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Three-row picture of one Euler class: sources of `Γ_D`, the shared middle
/// row, destinations of `Γ_{D'}`. Each nonzero `a[k][i][j]` is a path
/// `s{j} -> m{i} -> t{k}` labelled with its count.
pub fn euler_class(class: &EulerClass) -> String {
    let n = class.n();
    let mut out = String::new();
    let _ = writeln!(out, "digraph euler_class {{");
    let _ = writeln!(out, "  rankdir=TB;");
    let _ = writeln!(out, "  node [shape=circle];");
    let _ = writeln!(out, "  edge [arrowhead=none];");
    row(&mut out, "s", "source", n);
    row(&mut out, "m", "middle", n);
    row(&mut out, "t", "destination", n);
    let _ = writeln!(out, "  {{ edge [style=invis]; s1 -> m1 -> t1; }}");
    chain(&mut out, "s", "t", n);
    if n > 1 {
        let mid = (1..=n).map(|v| format!("m{v}")).collect::<Vec<_>>().join(" -> ");
        let _ = writeln!(out, "  {mid} [style=invis];");
    }
    let mut paths: Vec<(usize, usize, usize, u32)> = class.nonzero().collect();
    // sort by (source, middle, destination)
    paths.sort_by_key(|&(k, i, j, _)| (j, i, k));
    for (k, i, j, c) in paths {
        let _ = writeln!(out, "  s{j} -> m{i} -> t{k} [label=\"{c}\"];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplication::euler_classes;

    #[test]
    fn worked_example_graph_edges() {
        let m: BasisMatrix = "2,0,0;1,0,2;0,0,0".parse().unwrap();
        let dot = multigraph(&m);
        let edges: Vec<&str> = dot.lines().filter(|l| l.trim_start().starts_with('s') && l.contains("->") && !l.contains("invis")).collect();
        assert_eq!(edges, ["  s1 -> t1;", "  s1 -> t1;", "  s1 -> t2;", "  s3 -> t2;", "  s3 -> t2;"]);
        assert_eq!(dot, multigraph(&m));
    }

    #[test]
    fn euler_class_paths() {
        let a: BasisMatrix = "2,0,0;1,0,2;0,0,0".parse().unwrap();
        let b: BasisMatrix = "1,0,0;1,1,0;0,2,0".parse().unwrap();
        let classes = euler_classes(&a, &b).unwrap();
        let dot = euler_class(&classes[0]);
        let total: u32 = dot
            .lines()
            .filter_map(|l| l.split("label=\"").nth(1))
            .filter_map(|s| s.trim_end_matches("\"];").parse::<u32>().ok())
            .sum();
        assert_eq!(total, 5);
    }
}
