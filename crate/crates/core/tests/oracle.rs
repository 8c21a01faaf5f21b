use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qmat::detid::reduce_mod_i1;
use qmat::oracle::{
    build_theta_matrix, coinvariant_dimension, kernel_equals_i1, verify_all, verify_pbw, verify_s_basis, Caps,
};
use qmat::scalar::rational;
use qmat::{Algebra, Error};

#[test]
fn small_kernel_dimensions() {
    let caps = Caps::default();
    let dims: Vec<usize> = (0..=4).map(|d| kernel_equals_i1(2, 2, d, &caps).unwrap().kernel_dim).collect();
    assert_eq!(dims, [0, 0, 1, 4, 10]);
    for n in 1..=3 {
        for d in 0..=3 {
            assert_eq!(kernel_equals_i1(1, n, d, &caps).unwrap().kernel_dim, 0);
        }
    }
}

#[test]
fn ranks_survive_generic_specialization() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0101);
    for (m, n, d) in [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2), (3, 3, 2)] {
        let map = build_theta_matrix(m, n, d, &caps).unwrap();
        let c = loop {
            let c = rational(rng.random_range(-9..=9), rng.random_range(1..=5));
            if !qmat::parse::is_degenerate_q(&c) {
                break c;
            }
        };
        assert_eq!(map.rank_at(&c).unwrap(), map.rank(), "{m}x{n} d={d} at {c}");
    }
}

#[test]
fn kernel_vectors_reduce_to_zero() {
    let map = build_theta_matrix(2, 3, 2, &Caps::default()).unwrap();
    let kernel = map.kernel();
    assert_eq!(kernel.len(), map.source_basis.len() - map.rank());
    for k in &kernel {
        assert!(reduce_mod_i1(k).unwrap().is_zero(), "{k}");
    }
}

#[test]
fn spanning_set_sizes() {
    let caps = Caps::default();
    let got: Vec<usize> = (0..=3).map(|d| verify_s_basis(2, 2, d, &caps).unwrap().s_words).collect();
    assert_eq!(got, [1, 4, 9, 16]);
}

#[test]
fn coinvariant_dimensions() {
    let t = Algebra::affine_tensor(2, 2).unwrap();
    assert_eq!(coinvariant_dimension(&t, 1, 1).unwrap(), 4);
    assert_eq!(coinvariant_dimension(&t, 2, 1).unwrap(), 0);
    assert_eq!(coinvariant_dimension(&t, 2, 2).unwrap(), 9);
}

#[test]
fn pbw_dimensions() {
    let r = verify_pbw(2, 3, 3, &Caps::default()).unwrap();
    assert!(r.pass());
    assert!(r.dims.iter().all(|&(_, want, got)| want == got));
}

#[test]
fn caps_are_enforced() {
    let caps = Caps::default();
    assert!(matches!(build_theta_matrix(4, 2, 1, &caps), Err(Error::CapExceeded { .. })));
    assert!(matches!(build_theta_matrix(2, 2, 5, &caps), Err(Error::CapExceeded { .. })));
    let wide = Caps { max_m: 1, max_n: 4, max_degree: 2 };
    assert!(kernel_equals_i1(1, 4, 2, &wide).unwrap().pass());
}

#[test]
fn full_run_is_ordered_and_green() {
    let caps = Caps { max_m: 2, max_n: 2, max_degree: 3 };
    let a = verify_all(&caps).unwrap();
    let b = verify_all(&caps).unwrap();
    assert_eq!(a, b);
    assert!(a.iter().all(|c| c.pass));
    assert!(a.iter().any(|c| c.check == "commutation"));
}
