use std::cmp::Ordering;
use std::time::Instant;

use crate::algebra::MultiIndex;
use crate::modules::order_compare;
use crate::window::indices_up_to;

use super::{Counterexample, Report};

/// `i > j` read literally: larger degree, or equal degree and some `s` with
/// `i_s > j_s` and `i_p = j_p` for every `p > s`.
fn greater_literal(i: &MultiIndex, j: &MultiIndex) -> bool {
    if i.degree() != j.degree() {
        return i.degree() > j.degree();
    }
    let n = i.len();
    (1..=n).any(|s| i.at(s) > j.at(s) && (s + 1..=n).all(|p| i.at(p) == j.at(p)))
}

/// Exhaustive check that the comparator agrees with the literal definition
/// and is a total order on all multi-indices of length `nvars` with degree at
/// most `max_degree`.
pub fn check_order_total(nvars: usize, max_degree: u32) -> Report {
    let started = Instant::now();
    let all = indices_up_to(nvars, max_degree);
    let cmp = |a: &MultiIndex, b: &MultiIndex| order_compare(a, b).expect("equal lengths");
    let fail = |what: &str, lhs: String, rhs: String, inputs: &[(&str, &MultiIndex)]| {
        let mut c = Counterexample::new(what, lhs, rhs);
        for (k, v) in inputs {
            c = c.input(k, v.to_string());
        }
        Some(c)
    };

    let mut cex = None;
    let mut tested = 0u64;
    'pairs: for a in &all {
        for b in &all {
            tested += 1;
            let got = cmp(a, b);
            let want = if a == b {
                Ordering::Equal
            } else if greater_literal(a, b) {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            if got != want {
                cex = fail("comparator matches the definition", format!("{got:?}"), format!("{want:?}"), &[("i", a), ("j", b)]);
                break 'pairs;
            }
            // totality: exactly one of a > b, b > a, a = b
            let count = [greater_literal(a, b), greater_literal(b, a), a == b].iter().filter(|x| **x).count();
            if count != 1 || cmp(b, a) != got.reverse() {
                cex = fail("exactly one of i > j, j > i, i = j", count.to_string(), "1".into(), &[("i", a), ("j", b)]);
                break 'pairs;
            }
        }
    }

    // transitivity follows from a sorted chain: sort, then check every pair
    // in sorted order compares Less, which by the pairwise agreement above
    // means the relation is the order of that chain
    if cex.is_none() {
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| cmp(a, b));
        for (x, a) in sorted.iter().enumerate() {
            for b in &sorted[x + 1..] {
                tested += 1;
                if !greater_literal(b, a) {
                    cex = fail("transitivity: sorted chain is strictly increasing", format!("{a} >= {b}"), format!("{a} < {b}"), &[("i", a), ("j", b)]);
                    break;
                }
            }
            if cex.is_some() {
                break;
            }
        }
    }
    Report::new("order_total", tested, cex, started)
        .with_note(format!("{} multi-indices of length {nvars}, degree <= {max_degree}", all.len()))
}
