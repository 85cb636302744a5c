use std::time::Instant;

use crate::algebra::{AlgebraElement, Monomial, MultiIndex};
use crate::lie::{SpanningFamily, WittElement};
use crate::linear::LinComb;
use crate::print;
use crate::sample::{rng_for, small_rational};
use crate::{qi, Q};

use super::spans::BlockSpan;
use super::{Counterexample, Report, Verifier, STREAM_DIV, STREAM_LIE, STREAM_NILPOTENT};

impl Verifier {
    /// Antisymmetry, bilinearity and the Jacobi identity on seeded random
    /// combinations of window operators.
    pub fn check_lie_axioms(&self) -> Report {
        self.check_lie_axioms_with(&|a, b| self.space.bracket_unchecked(a, b))
    }

    /// [`Verifier::check_lie_axioms`] with a substitute bracket.
    pub fn check_lie_axioms_with<F>(&self, bracket: &F) -> Report
    where
        F: Fn(&WittElement, &WittElement) -> WittElement + Sync,
    {
        let started = Instant::now();
        let monos = self.window_monomials();
        let n = self.window.sample_count;
        let cex = self.exec.find_map_first_range(n, |k| {
            let mut rng = rng_for(self.window.seed, STREAM_LIE, k as u64);
            let a = self.random_witt(&mut rng, &monos, 3);
            let b = self.random_witt(&mut rng, &monos, 3);
            let c = self.random_witt(&mut rng, &monos, 3);
            let s = small_rational(&mut rng);
            let tag = |cex: Counterexample| {
                cex.input("a", print::witt(&a))
                    .input("b", print::witt(&b))
                    .input("c", print::witt(&c))
                    .input("sample", k.to_string())
            };

            let ab = bracket(&a, &b);
            let ba = bracket(&b, &a);
            if ab != -&ba {
                return Some(tag(Counterexample::new(
                    "antisymmetry: [a,b] = -[b,a]",
                    print::witt(&ab),
                    print::witt(&-&ba),
                )));
            }

            let mut combo = a.clone();
            combo.add_scaled(&c, &s);
            let lhs = bracket(&combo, &b);
            let mut rhs = ab.clone();
            rhs.add_scaled(&bracket(&c, &b), &s);
            if lhs != rhs {
                return Some(tag(Counterexample::new(
                    "bilinearity: [a + s c, b] = [a,b] + s [c,b]",
                    print::witt(&lhs),
                    print::witt(&rhs),
                ))
                .input("s", s.to_string()));
            }

            let jac = bracket(&ab, &c) + bracket(&bracket(&b, &c), &a) + bracket(&bracket(&c, &a), &b);
            if !jac.is_zero() {
                return Some(tag(Counterexample::new(
                    "Jacobi: [[a,b],c] + [[b,c],a] + [[c,a],b] = 0",
                    print::witt(&jac),
                    "0".into(),
                )));
            }
            None
        });
        Report::new("lie_axioms", n as u64, cex, started)
    }

    /// `div D_{p,q}(x^alpha t^i) = 0` for every window member at `rho = 0`,
    /// and for seeded random combinations of members.
    pub fn check_divergence_free(&self) -> Report {
        self.check_divergence_free_with(&|w| self.space.divergence_unchecked(w))
    }

    pub fn check_divergence_free_with<F>(&self, div: &F) -> Report
    where
        F: Fn(&WittElement) -> AlgebraElement + Sync,
    {
        let started = Instant::now();
        let family = self.family();
        let cex = self.exec.find_map_first(&family.members, |m| {
            let d = div(&m.op);
            (!d.is_zero()).then(|| {
                Counterexample::new("div D_{p,q}(u) = 0", print::algebra(&d), "0".into())
                    .input("operator", print::witt(&m.op))
                    .input("p", m.p.to_string())
                    .input("q", m.q.to_string())
                    .input("u", print::algebra(&LinComb::basis(m.mono.clone())))
            })
        });
        let samples = self.window.sample_count;
        let cex = cex.or_else(|| {
            if family.is_empty() {
                return None;
            }
            self.exec.find_map_first_range(samples, |k| {
                let mut rng = rng_for(self.window.seed, STREAM_DIV, k as u64);
                let w = self.random_family_combo(&mut rng, &family, 4);
                let d = div(&w);
                (!d.is_zero()).then(|| {
                    Counterexample::new("div of a combination of D_{p,q}(u) = 0", print::algebra(&d), "0".into())
                        .input("operator", print::witt(&w))
                })
            })
        });
        let tested = family.len() + if family.is_empty() { 0 } else { samples };
        Report::new("divergence_free", tested as u64, cex, started)
            .with_note("rho = 0; operators with rho != 0 are outside the claim")
    }

    /// Every bracket of two window members lies in the span of the members
    /// over the doubled window. By bilinearity it suffices to bracket pairs
    /// from a basis of the window family.
    pub fn check_subalgebra_closure(&self) -> Report {
        let started = Instant::now();
        let family = self.family();
        let doubled = self.window.doubled();
        let big = self
            .space
            .spanning_family(&doubled, &self.space.zero_group())
            .expect("zero rho");
        let span = self.family_span(&big);
        let mut basis_span = BlockSpan::new();
        let ops: Vec<&WittElement> = family.ops().filter(|op| basis_span.insert(op) > 0).collect();
        let n = ops.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let cex = self.exec.find_map_first(&pairs, |&(a, b)| {
            let br = self.space.bracket_unchecked(ops[a], ops[b]);
            if self.space.witt_in_window(&br, &doubled) && span.contains(&br) {
                return None;
            }
            Some(
                Counterexample::new(
                    "[a,b] lies in the span of D_{p,q}(x^alpha t^i) over the doubled window",
                    print::witt(&br),
                    "(not in span)".into(),
                )
                .input("a", print::witt(ops[a]))
                .input("b", print::witt(ops[b])),
            )
        });
        Report::new("subalgebra_closure", pairs.len() as u64, cex, started).with_note(format!(
            "{} members with a basis of {n}; span over doubled window has dim {}",
            family.len(),
            span.dim()
        ))
    }

    pub(crate) fn family_span(&self, family: &SpanningFamily) -> BlockSpan<crate::lie::WittTerm> {
        // blocks are independent; build them in parallel then merge
        let mut by_grade: Vec<(crate::lattice::GroupElement, Vec<&WittElement>)> = Vec::new();
        for m in &family.members {
            match by_grade.iter_mut().find(|(g, _)| *g == m.mono.alpha) {
                Some((_, v)) => v.push(&m.op),
                None => by_grade.push((m.mono.alpha.clone(), vec![&m.op])),
            }
        }
        let built = self.exec.map(&by_grade, |(g, ops)| {
            let mut e = crate::linalg::Echelon::new();
            for op in ops {
                e.insert(op);
            }
            (g.clone(), e)
        });
        let mut span = BlockSpan::new();
        for (g, e) in built {
            *span.block_mut(&g) = e;
        }
        span
    }

    /// `D_{p,q}` computed from its defining formula equals the closed-form
    /// expansion on every window monomial and every `p != q` (`rho = 0`).
    pub fn check_closed_form(&self) -> Report {
        let started = Instant::now();
        let monos = self.window_monomials();
        let l = self.space.l();
        let rho = self.space.zero_group();
        let pairs: Vec<(usize, usize)> = (1..=l)
            .flat_map(|p| (1..=l).filter(move |&q| q != p).map(move |q| (p, q)))
            .collect();
        let cex = self.exec.find_map_first(&monos, |m| {
            let u = LinComb::basis(m.clone());
            pairs.iter().find_map(|&(p, q)| {
                let lhs = self.space.d_op_unchecked(p, q, &u, &rho);
                let rhs = self.space.d_op_expanded(p, q, m).expect("window monomial");
                (lhs != rhs).then(|| {
                    Counterexample::new("D_{p,q}(u) equals its closed-form expansion", print::witt(&lhs), print::witt(&rhs))
                        .input("p", p.to_string())
                        .input("q", q.to_string())
                        .input("u", print::algebra(&u))
                })
            })
        });
        Report::new("closed_form", (monos.len() * pairs.len()) as u64, cex, started)
    }

    /// The bracket recurrence used to raise t-degrees in the generation proof:
    ///
    /// `[D_{p,q}(x^a t^i), D_{r,s}(t^{2_[r]})] = 2(d_{pr} D_{s,q}(x^a t^i) - d_{qr} D_{s,p}(x^a t^i)
    ///   - i_s D_{p,q}(x^a t^{i+1_[r]-1_[s]}) - a_s D_{p,q}(x^a t^{i+1_[r]}))`
    ///
    /// for `r` a polynomial direction and `s != r`, on every window tuple.
    pub fn check_recurrence(&self) -> Report {
        let started = Instant::now();
        let space = &self.space;
        let l = space.l();
        let nt = space.poly_vars();
        let rho = space.zero_group();
        let monos = self.window_monomials();
        let d = |p: usize, q: usize, m: &Monomial| space.d_op_unchecked(p, q, &LinComb::basis(m.clone()), &rho);
        let mut tuples = Vec::new();
        for p in 1..=l {
            for q in (1..=l).filter(|&q| q != p) {
                for r in 1..=nt {
                    for s in (1..=l).filter(|&s| s != r) {
                        tuples.push((p, q, r, s));
                    }
                }
            }
        }
        let cex = self.exec.find_map_first(&monos, |m| {
            tuples.iter().find_map(|&(p, q, r, s)| {
                let t2r = Monomial::new(space.zero_group(), MultiIndex::unit(nt, r, 2));
                let lhs = space.bracket_unchecked(&d(p, q, m), &d(r, s, &t2r));
                let mut rhs = WittElement::zero();
                if p == r {
                    rhs.add_assign_ref(&d(s, q, m));
                }
                if q == r {
                    rhs.add_scaled(&d(s, p, m), &qi(-1));
                }
                let up = m.idx.increment(r).expect("r is a polynomial direction");
                if let Some(shifted) = up.decrement(s) {
                    if m.idx.at(s) > 0 {
                        let mono = Monomial::new(m.alpha.clone(), shifted);
                        rhs.add_scaled(&d(p, q, &mono), &qi(-(m.idx.at(s) as i64)));
                    }
                }
                let a_s: Q = space.alpha_coord(&m.alpha, s);
                rhs.add_scaled(&d(p, q, &Monomial::new(m.alpha.clone(), up)), &-a_s);
                let rhs = rhs.scale(&qi(2));
                (lhs != rhs).then(|| {
                    Counterexample::new("generation recurrence", print::witt(&lhs), print::witt(&rhs))
                        .input("p", p.to_string())
                        .input("q", q.to_string())
                        .input("r", r.to_string())
                        .input("s", s.to_string())
                        .input("u", print::algebra(&LinComb::basis(m.clone())))
                })
            })
        });
        Report::new("recurrence", (monos.len() * tuples.len()) as u64, cex, started)
    }

    /// For `p <= l1`, `ad d_p` kills a window element after `1 + max i_p` steps.
    pub fn check_ad_nilpotent(&self) -> Report {
        let started = Instant::now();
        let l1 = self.space.signature().l1();
        if l1 == 0 {
            return Report::new("ad_nilpotent", 0, None, started).with_note("l1 = 0: no locally nilpotent directions");
        }
        let family = self.family();
        let n = self.window.sample_count;
        let cex = self.exec.find_map_first_range(n, |k| {
            let mut rng = rng_for(self.window.seed, STREAM_NILPOTENT, k as u64);
            let w = self.random_family_combo(&mut rng, &family, 3);
            (1..=l1).find_map(|p| {
                let order = 1 + w.keys().map(|t| t.mono.idx.at(p)).max().unwrap_or(0) as usize;
                let out = self.space.ad_power(&self.space.d(p), &w, order);
                (!out.is_zero()).then(|| {
                    Counterexample::new("(ad d_p)^(1 + max i_p) w = 0", print::witt(&out), "0".into())
                        .input("p", p.to_string())
                        .input("w", print::witt(&w))
                })
            })
        });
        Report::new("ad_nilpotent", (n * l1) as u64, cex, started)
    }
}
