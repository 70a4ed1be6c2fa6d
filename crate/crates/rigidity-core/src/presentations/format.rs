//! Canonical formatter for the `.pres` format; `parse(format(p)) == p`.

use super::RingPresentation;

/// Deterministic canonical text: declaration order for variables, an
/// explicit order line, and relation terms sorted in the declared lex order.
pub fn format_canonical(pres: &RingPresentation) -> String {
    let ctx = pres.ctx();
    let mut out = String::new();
    out.push_str(&format!("presentation \"{}\"\n", pres.name()));
    for i in 0..ctx.len() {
        out.push_str(&format!("var {} deg {}\n", ctx.name(i), ctx.weight(i)));
    }
    out.push_str(&format!("order lex {}\n", ctx.precedence_names().join(" > ")));
    for rel in pres.relations() {
        out.push_str(&format!(
            "rel {} deg {} = {}\n",
            rel.label, rel.weight, rel.poly
        ));
    }
    out
}
