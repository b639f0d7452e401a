//! Rank and jump-index values frozen from an independent minor-determinant
//! oracle, checked against the elimination-based implementation.

mod common;

use common::{prefix_ranks_by_minors, rank_by_minors};
use nilcortex::coadjoint::{jump_indices, orbit_dimension, skew_form, tangent_space, Covector};
use nilcortex::exactmath::rat;
use nilcortex::gd::{make_gd, pos_z};
use nilcortex::liealg::LieAlgebra;
use nilcortex::sampling::RationalSampler;
use nilcortex::Rat;

#[test]
fn g2_skew_form_rank_at_z1_dual() {
    let g = make_gd(2).unwrap();
    let ell = Covector::basis_dual(8, pos_z(2, 1));
    let m = skew_form(g.algebra(), &ell).unwrap();
    assert_eq!(rank_by_minors(m.matrix()), 4);
    assert_eq!(m.rank(), 4);
    assert_eq!(m.matrix().rank_and_kernel().0, 4);
    assert_eq!(orbit_dimension(g.algebra(), &ell).unwrap(), 4);
}

#[test]
fn g2_skew_form_rank_at_z2_dual() {
    // Two hyperbolic pairs ([X1,Y2] and [X2,Y4] both hit Z2), so the rank
    // is 4 despite z1 = 0; the layer differs (jumps move to {4,6,7,8}).
    let g = make_gd(2).unwrap();
    let ell = Covector::basis_dual(8, pos_z(2, 2));
    let m = skew_form(g.algebra(), &ell).unwrap();
    assert_eq!(rank_by_minors(m.matrix()), 4);
    assert_eq!(orbit_dimension(g.algebra(), &ell).unwrap(), 4);
    assert_eq!(tangent_space(g.algebra(), &ell).unwrap().dim(), 4);
    assert_eq!(jump_indices(g.algebra(), &ell).unwrap().indices(), &[4, 6, 7, 8]);
}

#[test]
fn g2_generic_jump_rows_match_minor_oracle() {
    let g = make_gd(2).unwrap();
    let mut sampler = RationalSampler::new(2024);
    for _ in 0..5 {
        let mut coords = sampler.vector(8);
        coords[0] = sampler.nonzero(); // z1 != 0
        let ell = Covector::new(coords);
        let m = skew_form(g.algebra(), &ell).unwrap();
        let oracle_prefix = prefix_ranks_by_minors(m.matrix());
        assert_eq!(m.matrix().incremental_row_ranks(), oracle_prefix);
        let mut jumps = Vec::new();
        let mut prev = 0;
        for (row, &r) in oracle_prefix.iter().enumerate() {
            if r > prev {
                jumps.push(row + 1);
            }
            prev = r;
        }
        assert_eq!(jumps, vec![3, 5, 7, 8]);
        assert_eq!(jump_indices(g.algebra(), &ell).unwrap().indices(), &[3, 5, 7, 8]);
    }
}

#[test]
fn heisenberg_rank_matches_oracle() {
    let h = LieAlgebra::heisenberg();
    let ell = Covector::basis_dual(3, 2);
    let m = skew_form(&h, &ell).unwrap();
    assert_eq!(rank_by_minors(m.matrix()), 2);
    assert_eq!(m.rank(), 2);
}

#[test]
fn random_small_matrices_rank_matches_oracle() {
    let mut sampler = RationalSampler::new(5);
    for _ in 0..10 {
        let rows: Vec<Vec<Rat>> = (0..4).map(|_| sampler.vector(5)).collect();
        let m = nilcortex::RatMatrix::from_rows(rows).unwrap();
        assert_eq!(m.rank(), rank_by_minors(&m));
        assert_eq!(m.rank_and_kernel().0, rank_by_minors(&m));
    }
    // a guaranteed rank-deficient case: duplicated and scaled rows
    let base = sampler.vector(5);
    let doubled: Vec<Rat> = base.iter().map(|c| c * &rat(2)).collect();
    let m = nilcortex::RatMatrix::from_rows(vec![base.clone(), doubled, sampler.vector(5)]).unwrap();
    assert_eq!(m.rank(), rank_by_minors(&m));
}
