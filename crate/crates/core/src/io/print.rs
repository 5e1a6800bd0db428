//! Printing presentations in the format read by [`parse_dgl`](super::parse_dgl).

use std::fmt::Write;

use crate::dgl::DglPresentation;
use crate::generators::Origin;
use crate::scalar::Scalar;

/// Renders a presentation as a file that parses back to an equal presentation.
pub fn print_dgl<C: Scalar>(p: &DglPresentation<C>) -> String {
    let set = p.set();
    let mut out = String::new();
    let _ = writeln!(out, "dgl {}", p.label());
    for g in set.gens() {
        let gen = set.generator(g);
        let tag = match gen.origin {
            Origin::RightFactor => " right",
            _ => "",
        };
        let _ = writeln!(out, "gen {} {}{}", gen.name, gen.degree, tag);
    }
    for g in set.gens() {
        let d = p.d(g);
        if !d.is_empty() {
            let _ = writeln!(out, "diff {} = {}", set.name(g), d);
        }
    }
    out
}
