//! Graphviz output.

use std::fmt::Write;

use super::{validate_zxcf, ZxcfDiagram};

fn phase_label(q: u8) -> &'static str {
    match q {
        1 => "π/2",
        2 => "π",
        3 => "3π/2",
        _ => "",
    }
}

/// DOT text with inputs in one rank and outputs in the next. Internal edges
/// are Hadamard edges and drawn blue; an output's Hadamard and phase go in
/// its label. Rule violations are listed as comments and the offending
/// diagram is outlined in red.
pub fn render_dot(d: &ZxcfDiagram) -> String {
    let mut s = String::new();
    s.push_str("graph zxcf {\n  rankdir=LR;\n  node [shape=circle];\n");
    if let Err(violations) = validate_zxcf(d) {
        for v in violations {
            let _ = writeln!(s, "  // violation: {v}");
        }
        s.push_str("  graph [color=red, style=dashed];\n");
    }
    let inputs = d.num_inputs();
    if inputs > 0 {
        s.push_str("  { rank=same;");
        for j in 0..inputs {
            let _ = write!(s, " i{j} [label=\"in{j}\", shape=box];");
        }
        s.push_str(" }\n");
    }
    if d.n() > 0 {
        s.push_str("  { rank=same;");
        for o in 0..d.n() {
            let mut label = format!("{o}");
            if d.had(o) {
                label.push_str("\\nH");
            }
            let p = phase_label(d.phase(o));
            if !p.is_empty() {
                label.push_str("\\n");
                label.push_str(p);
            }
            let _ = write!(s, " o{o} [label=\"{label}\"];");
        }
        s.push_str(" }\n");
    }
    for j in 0..inputs {
        for o in d.m().row(j).ones() {
            let _ = writeln!(s, "  i{j} -- o{o} [color=blue];");
        }
    }
    for (u, v) in d.a_edges() {
        let _ = writeln!(s, "  o{u} -- o{v} [color=blue];");
    }
    s.push_str("}\n");
    s
}
