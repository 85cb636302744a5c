use std::time::Instant;

use malachite_base::num::arithmetic::traits::Lcm;
use malachite_nz::natural::Natural;

use crate::linalg::{solve_unique, Echelon};
use crate::linear::LinComb;
use crate::{Scalar, Q};

use super::{Counterexample, Report};

/// Largest |constant term| for which candidate roots are enumerated.
const ROOT_SEARCH_LIMIT: u64 = 1 << 32;

/// Rational roots of `c_0 + c_1 x + ... + c_n x^n` with multiplicity one
/// each, sorted. `None` if a coefficient is too large to search.
pub fn rational_roots(coeffs: &[Q]) -> Option<Vec<Q>> {
    let mut c: Vec<Q> = coeffs.to_vec();
    while c.last().is_some_and(Scalar::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    if c[0].is_zero() {
        roots.push(Q::zero());
        while c.first().is_some_and(Scalar::is_zero) {
            c.remove(0);
        }
    }
    // clear denominators
    let lcm = c.iter().fold(Natural::from(1u32), |acc, x| (&acc).lcm(x.denominator_ref()));
    let scale = Q::from(lcm);
    let bound = |x: &Q| -> Option<u64> {
        let n = u64::try_from((x * &scale).numerator_ref()).ok()?;
        (n <= ROOT_SEARCH_LIMIT).then_some(n)
    };
    let a0 = bound(&c[0])?;
    let an = bound(&c[c.len() - 1])?;
    let eval = |x: &Q| c.iter().rev().fold(Q::zero(), |acc, k| acc * x + k);
    for num in divisors(a0) {
        for den in divisors(an) {
            let cand = Q::from_unsigneds(num, den);
            for x in [cand.clone(), -cand] {
                if eval(&x).is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Given `sum`, a sum of eigenvectors of `op` for distinct eigenvalues, and a
/// subspace stable under `op` containing `sum`, checks that every eigen
/// component of `sum` lies in the subspace.
///
/// The components come from the minimal polynomial of `sum` (found from its
/// Krylov sequence) and the Lagrange projectors on its roots. Only rational
/// spectra are handled; anything else is reported as a failure.
pub fn eigen_split<K, F>(op: F, subspace: &[LinComb<K>], sum: &LinComb<K>) -> Report
where
    K: Ord + Clone,
    F: Fn(&LinComb<K>) -> LinComb<K>,
{
    let started = Instant::now();
    let check = "eigen_split";
    let fail = |what: &str, lhs: String, rhs: String| Report::failed(check, 1, Counterexample::new(what, lhs, rhs), started);

    let mut u = Echelon::new();
    for s in subspace {
        u.insert(s);
    }
    if !u.contains(sum) {
        return fail("precondition: the sum lies in the subspace", "outside".into(), "inside".into());
    }
    if let Some(k) = subspace.iter().position(|s| !u.contains(&op(s))) {
        return fail("precondition: the subspace is stable", format!("image of generator {k} outside"), "inside".into());
    }

    // Krylov sequence until the first dependency
    let mut krylov = vec![sum.clone()];
    let mut span = Echelon::new();
    span.insert(sum);
    loop {
        let next = op(krylov.last().expect("nonempty"));
        if span.contains(&next) {
            krylov.push(next);
            break;
        }
        span.insert(&next);
        krylov.push(next);
    }
    let d = krylov.len() - 1;
    let keys: Vec<&K> = {
        let mut ks: Vec<&K> = krylov.iter().flat_map(|v| v.keys()).collect();
        ks.sort();
        ks.dedup();
        ks
    };
    let rows: Vec<Vec<Q>> = keys.iter().map(|k| krylov[..d].iter().map(|v| v.coeff(k)).collect()).collect();
    let rhs: Vec<Q> = keys.iter().map(|k| krylov[d].coeff(k)).collect();
    let Some(c) = solve_unique(&rows, &rhs) else {
        return fail("Krylov vectors independent", "dependent".into(), "independent".into());
    };
    // minimal polynomial x^d - sum c_k x^k
    let mut poly: Vec<Q> = c.iter().map(|x| -x).collect();
    poly.push(Q::one());
    let Some(roots) = rational_roots(&poly) else {
        return fail("rational spectrum", "coefficients too large to search".into(), "small integers".into());
    };
    if roots.len() != d {
        return fail(
            "the sum splits into eigenvectors with rational eigenvalues",
            format!("{} rational roots", roots.len()),
            format!("minimal polynomial of degree {d}"),
        )
        .with_note("non-rational or repeated spectrum is reported, not resolved");
    }

    let mut total = LinComb::zero();
    for (k, lam) in roots.iter().enumerate() {
        let mut comp = sum.clone();
        for (j, other) in roots.iter().enumerate() {
            if j != k {
                let shifted = op(&comp) - comp.scale(other);
                comp = shifted.scale(&(Q::one() / (lam - other)));
            }
        }
        if op(&comp) != comp.scale(lam) {
            return fail("component is an eigenvector", "T u != lambda u".into(), format!("lambda = {lam}"));
        }
        if !u.contains(&comp) {
            return fail("every eigen component lies in the subspace", "outside".into(), format!("lambda = {lam}"));
        }
        total.add_assign_ref(&comp);
    }
    if &total != sum {
        return fail("components add up to the sum", "mismatch".into(), "sum".into());
    }
    let list: Vec<String> = roots.iter().map(ToString::to_string).collect();
    Report::new(check, d as u64, None, started).with_note(format!("eigenvalues {}", list.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qi};

    #[test]
    fn roots_of_small_polynomials() {
        // (x - 1)(x + 2)(2x - 1) = 2x^3 + x^2 - 5x + 2
        assert_eq!(rational_roots(&[qi(2), qi(-5), qi(1), qi(2)]), Some(vec![qi(-2), q(1, 2), qi(1)]));
        // x^2 + 1 has none
        assert_eq!(rational_roots(&[qi(1), qi(0), qi(1)]), Some(vec![]));
        assert_eq!(rational_roots(&[qi(0), qi(3)]), Some(vec![qi(0)]));
    }

    #[test]
    fn diagonal_operator_on_coordinate_subspace() {
        let diag = |v: &LinComb<u32>| v.iter().map(|(k, c)| (*k, c * qi(*k as i64))).collect::<LinComb<u32>>();
        let sub = vec![LinComb::basis(1u32), LinComb::basis(2u32)];
        let sum = LinComb::basis(1u32) + LinComb::term(2u32, q(3, 2));
        assert!(eigen_split(diag, &sub, &sum).passed());
    }

    #[test]
    fn unstable_subspace_is_reported() {
        // swaps 1 and 2; span of e1 + e2 is stable, span of e1 is not
        let swap = |v: &LinComb<u32>| v.map_keys(|k| 3 - k);
        let sub = vec![LinComb::basis(1u32)];
        assert!(!eigen_split(swap, &sub, &LinComb::basis(1u32)).passed());
        let sub = vec![LinComb::basis(1u32) + LinComb::basis(2u32)];
        assert!(eigen_split(swap, &sub, &sub[0]).passed());
    }

    #[test]
    fn irrational_spectrum_is_reported() {
        // e1 -> e2 -> 2 e1 has eigenvalues +-sqrt 2
        let op = |v: &LinComb<u32>| {
            let mut out = LinComb::zero();
            out.add_term(2u32, v.coeff(&1));
            out.add_term(1u32, v.coeff(&2) * qi(2));
            out
        };
        let sub = vec![LinComb::basis(1u32), LinComb::basis(2u32)];
        assert!(!eigen_split(op, &sub, &LinComb::basis(1u32)).passed());
    }
}
