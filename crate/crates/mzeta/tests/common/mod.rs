#![allow(dead_code)]

use mzeta::dsl::{Leaf, VarietyExpr};
use rand::Rng;

pub fn random_leaf<R: Rng>(rng: &mut R) -> Leaf {
    match rng.gen_range(0..7) {
        0 => Leaf::Point,
        1 => Leaf::L,
        2 => Leaf::A(rng.gen_range(0..4)),
        3 => Leaf::P(rng.gen_range(0..5)),
        4 => Leaf::E,
        5 => Leaf::Curve(rng.gen_range(0..4)),
        _ => Leaf::Surface { q: rng.gen_range(0..3), pg: rng.gen_range(0..4) },
    }
}

fn sym_leaf<R: Rng>(rng: &mut R) -> Leaf {
    loop {
        let l = random_leaf(rng);
        if l.supports_sym() {
            return l;
        }
    }
}

/// Random expression tree of bounded depth.
pub fn random_tree<R: Rng>(rng: &mut R, depth: u32, allow_sym: bool) -> VarietyExpr {
    let b = |rng: &mut R| Box::new(random_tree(rng, depth.saturating_sub(1), allow_sym));
    if depth == 0 || rng.gen_bool(0.3) {
        return if allow_sym && rng.gen_bool(0.25) {
            VarietyExpr::Sym(sym_leaf(rng), rng.gen_range(0..4))
        } else {
            VarietyExpr::Leaf(random_leaf(rng))
        };
    }
    match rng.gen_range(0..4) {
        0 => VarietyExpr::Add(b(rng), b(rng)),
        1 => VarietyExpr::Sub(b(rng), b(rng)),
        2 => VarietyExpr::Mul(b(rng), b(rng)),
        _ => VarietyExpr::Pow(b(rng), rng.gen_range(0..3)),
    }
}
