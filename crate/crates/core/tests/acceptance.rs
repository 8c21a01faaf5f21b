//! Release gate. Each test prints one `PASS`/`FAIL` line with its runtime and
//! then asserts, so `cargo test --test acceptance -- --nocapture` gives a
//! summary of the whole gate.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qmat::detid::{quantum_determinant, reduce_mod_i1, s_basis};
use qmat::hspec::{
    enumerate_hprimes, hasse_diagram, p_ideal_generators, quotient_iso_check, DEFAULT_HASSE_CAP,
};
use qmat::ncalg::{component_dimension, Letter, Strategy};
use qmat::oracle::{kernel_equals_i1, verify_coinvariants, verify_commutation_scalars, verify_s_basis, Caps};
use qmat::{Algebra, LaurentScalar, NCPoly, Word};

fn gate(name: &str, limit: Option<Duration>, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let (pass, detail) = match &result {
        Ok(d) if in_time => (true, d.clone()),
        Ok(d) => (false, format!("{d}; took {elapsed:.2?}, limit {:?}", limit.unwrap())),
        Err(e) => (false, e.clone()),
    };
    println!("{} {name} [{elapsed:.2?}] {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "{name}: {detail}");
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn pbw_component_dimensions() {
    gate("pbw_component_dimensions", Some(Duration::from_secs(1)), || {
        let a = Algebra::quantum_matrix(2, 2).map_err(|e| e.to_string())?;
        let got: Vec<u128> = (0..=5).map(|d| component_dimension(&a, d)).collect();
        check(got == [1, 4, 10, 20, 35, 56], || format!("got {got:?}"))?;
        Ok(format!("{got:?}"))
    });
}

#[test]
fn rewriting_strategies_agree() {
    gate("rewriting_strategies_agree", Some(Duration::from_secs(10)), || {
        let a = Algebra::quantum_matrix(3, 3).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for k in 0..1000 {
            let len = rng.random_range(0..=6);
            let w: Word = (0..len).map(|_| rng.random_range(0..9) as Letter).collect();
            let p = NCPoly::from_terms(&a, [(w.clone(), LaurentScalar::one())]);
            let left = p.normal_form_with(Strategy::Leftmost);
            let right = p.normal_form_with(Strategy::Rightmost);
            check(left == right, || format!("word #{k} {w:?}: {left} vs {right}"))?;
        }
        Ok("1000 random words".into())
    });
}

#[test]
fn theta_kernel_is_the_minor_ideal() {
    gate("theta_kernel_is_the_minor_ideal", Some(Duration::from_secs(60)), || {
        let caps = Caps::default();
        let mut small = Vec::new();
        for m in 1..=3 {
            for n in 1..=3 {
                for d in 0..=4 {
                    let r = kernel_equals_i1(m, n, d, &caps).map_err(|e| e.to_string())?;
                    check(r.pass(), || format!("{r:?}"))?;
                    if (m, n) == (2, 2) && (1..=3).contains(&d) {
                        small.push(r.kernel_dim);
                    }
                }
            }
        }
        check(small == [0, 1, 4], || format!("2x2 kernel dimensions {small:?}"))?;
        Ok(format!("m,n <= 3, d <= 4; 2x2 kernels {small:?}"))
    });
}

#[test]
fn spanning_words_form_a_basis() {
    gate("spanning_words_form_a_basis", None, || {
        let caps = Caps::default();
        for m in 1..=3 {
            for n in 1..=3 {
                for d in 0..=4 {
                    let r = verify_s_basis(m, n, d, &caps).map_err(|e| e.to_string())?;
                    check(r.pass(), || format!("{r:?}"))?;
                }
            }
        }
        let r = verify_s_basis(2, 2, 2, &caps).map_err(|e| e.to_string())?;
        check(r.theta_rank == 9 && r.s_words == 9, || format!("{r:?}"))?;
        Ok("m,n <= 3, d <= 4; 2x2 degree 2 rank 9".into())
    });
}

#[test]
fn image_is_the_grading_zero_part() {
    gate("image_is_the_grading_zero_part", None, || {
        let caps = Caps::default();
        for m in 1..=3 {
            for n in 1..=3 {
                let r = verify_coinvariants(m, n, 3, &caps).map_err(|e| e.to_string())?;
                check(r.pass(), || format!("{r:?}"))?;
                for b in r.bidegrees.iter().filter(|b| b.r != b.s) {
                    check(b.coinvariant_dim == 0, || format!("bidegree ({}, {}) of {m}x{n}", b.r, b.s))?;
                }
            }
        }
        Ok("m,n <= 3, bidegrees up to (3, 3)".into())
    });
}

#[test]
fn commutation_scalars_modulo_minors() {
    gate("commutation_scalars_modulo_minors", Some(Duration::from_secs(10)), || {
        let r = verify_commutation_scalars(3, 3, &Caps::default()).map_err(|e| e.to_string())?;
        check(r.pass() && r.quadruples == 81, || format!("{r:?}"))?;
        Ok(format!("{} quadruples", r.quadruples))
    });
}

#[test]
fn hprime_counts() {
    gate("hprime_counts", None, || {
        for m in 1..=4u32 {
            for n in 1..=4u32 {
                let got = enumerate_hprimes(m as usize, n as usize).map_err(|e| e.to_string())?.len();
                let want = ((1usize << m) - 1) * ((1usize << n) - 1) + 1;
                check(got == want, || format!("{m}x{n}: {got} != {want}"))?;
            }
        }
        let two = enumerate_hprimes(2, 2).map_err(|e| e.to_string())?.len();
        check(two == 10, || format!("2x2 gives {two}"))?;
        Ok("m,n <= 4; 2x2 gives 10".into())
    });
}

#[test]
fn hasse_diagram_of_two_by_two() {
    gate("hasse_diagram_of_two_by_two", None, || {
        let h = hasse_diagram(2, 2, DEFAULT_HASSE_CAP).map_err(|e| e.to_string())?;
        check(h.nodes.len() == 10, || format!("{} nodes", h.nodes.len()))?;

        // independent transitive reduction: strict relations minus composites
        let key = |i: usize| {
            let p = &h.nodes[i];
            if p.is_maximal() {
                None
            } else {
                Some((p.rows().iter().fold(0u8, |a, r| a | 1 << r), p.cols().iter().fold(0u8, |a, c| a | 1 << c)))
            }
        };
        let below = |a: usize, b: usize| match (key(a), key(b)) {
            (_, None) => a != b,
            (None, Some(_)) => false,
            (Some((ra, ca)), Some((rb, cb))) => a != b && ra & rb == ra && ca & cb == ca,
        };
        let k = h.nodes.len();
        let strict: BTreeSet<(usize, usize)> =
            (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|&(a, b)| below(a, b)).collect();
        let composite: BTreeSet<(usize, usize)> = strict
            .iter()
            .flat_map(|&(a, c)| strict.iter().filter(move |&&(c2, _)| c2 == c).map(move |&(_, b)| (a, b)))
            .collect();
        let covers: BTreeSet<(usize, usize)> = strict.difference(&composite).copied().collect();
        let edges: BTreeSet<(usize, usize)> = h.edges.iter().copied().collect();
        check(edges == covers, || format!("edges {edges:?} vs brute force {covers:?}"))?;

        let bottom: Vec<usize> = (0..k).filter(|&b| (0..k).all(|a| a == b || below(b, a))).collect();
        let top: Vec<usize> = (0..k).filter(|&t| (0..k).all(|a| a == t || below(a, t))).collect();
        check(bottom.len() == 1 && top.len() == 1, || "no unique bottom/top".into())?;
        let (bot, top) = (&h.nodes[bottom[0]], &h.nodes[top[0]]);
        check(bot.rows().is_empty() && bot.cols().is_empty() && bot.label() == "(\u{25a1})", || bot.label())?;
        let a = Algebra::quantum_matrix(2, 2).map_err(|e| e.to_string())?;
        let gens = p_ideal_generators(bot).map_err(|e| e.to_string())?;
        check(gens == vec![quantum_determinant(&a).map_err(|e| e.to_string())?], || "bottom is not <D_q>".into())?;
        check(top.is_maximal(), || "top is not maximal".into())?;
        Ok(format!("{} nodes, {} edges", k, edges.len()))
    });
}

#[test]
fn quotients_are_smaller_quantum_matrices() {
    gate("quotients_are_smaller_quantum_matrices", None, || {
        let mut count = 0;
        for m in 1..=3 {
            for n in 1..=3 {
                for pair in enumerate_hprimes(m, n).map_err(|e| e.to_string())?.iter().filter(|p| !p.is_maximal()) {
                    let r = quotient_iso_check(pair).map_err(|e| e.to_string())?;
                    check(r.pass, || format!("{r:?}"))?;
                    count += 1;
                }
            }
        }
        Ok(format!("{count} non-maximal pairs"))
    });
}

#[test]
fn determinant_is_central() {
    gate("determinant_is_central", None, || {
        for n in 2..=3 {
            let a = Algebra::quantum_matrix(n, n).map_err(|e| e.to_string())?;
            let d = quantum_determinant(&a).map_err(|e| e.to_string())?;
            for i in 1..=n {
                for j in 1..=n {
                    let x = NCPoly::entries(&a, &[(i, j)]).map_err(|e| e.to_string())?;
                    let c = &(&d * &x) - &(&x * &d);
                    check(c.is_zero(), || format!("[D, X[{i},{j}]] = {c} for n = {n}"))?;
                }
            }
        }
        Ok("n = 2, 3".into())
    });
}

fn random_reduced(a: &std::sync::Arc<Algebra>, words: &[Word], rng: &mut ChaCha8Rng) -> NCPoly {
    loop {
        let terms = rng.random_range(1..=4);
        let mut p = NCPoly::zero(a);
        for _ in 0..terms {
            let w = words[rng.random_range(0..words.len())].clone();
            let c = LaurentScalar::from_int(rng.random_range(-3..=3)).shift(rng.random_range(-2..=2));
            p.add_term(w, &c);
        }
        if !p.is_zero() {
            return p;
        }
    }
}

#[test]
fn quotient_has_no_zero_divisors() {
    gate("quotient_has_no_zero_divisors", None, || {
        let a = Algebra::quantum_matrix(2, 2).map_err(|e| e.to_string())?;
        let words: Vec<Word> =
            (0..=3).map(|d| s_basis(&a, d)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?.concat();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
        for k in 0..500 {
            let x = random_reduced(&a, &words, &mut rng);
            let y = random_reduced(&a, &words, &mut rng);
            check(reduce_mod_i1(&x).map_err(|e| e.to_string())? == x, || format!("{x} is not reduced"))?;
            let prod = reduce_mod_i1(&(&x * &y)).map_err(|e| e.to_string())?;
            check(!prod.is_zero(), || format!("pair #{k}: ({x}) * ({y}) = 0"))?;
        }
        Ok("500 random pairs".into())
    });
}
