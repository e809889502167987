use coisotropy::coisotropic::{coisotropic_form, recover_variety, recovered_as_variety};
use coisotropy::fixtures::{fermat_cubic, segre_p1xp2_chow_dual};
use coisotropy::grassmann::GrassmannRing;
use coisotropy::segre::hyperdeterminant;
use coisotropy::variety::mutual_radical_membership;
use std::time::Instant;

fn main() {
    let stage = std::env::args().nth(1).unwrap_or_default();
    if stage == "recover" || stage.is_empty() {
        // recovery of the Fermat cubic from its Hurwitz form
        let x = fermat_cubic();
        let cf = coisotropic_form(&x, 1).unwrap();
        let t = Instant::now();
        let rec = recover_variety(&cf.form, 1, 3).unwrap();
        println!(
            "fermat hurwitz recovery: index {} dim {} deg {} in {:?}",
            rec.index,
            rec.dim,
            rec.degree,
            t.elapsed()
        );
        let back = recovered_as_variety(&rec, 3).unwrap();
        println!(
            "  mutual radical membership: {}",
            mutual_radical_membership(x.ideal(), back.ideal()).unwrap()
        );
    }
    if stage == "hyperdet" || stage.is_empty() {
        let t = Instant::now();
        let h = hyperdeterminant(&[2, 2, 3]).unwrap();
        println!(
            "2x2x3 hyperdet: degree {} terms {} (coisotropic index {}) in {:?}",
            h.polynomial.degree(),
            h.polynomial.num_terms(),
            h.coisotropic_index,
            t.elapsed()
        );
        // expected: 13-term cubic under stacked-minor substitution
        let t2 = Instant::now();
        let dual = GrassmannRing::dual(1, 5).unwrap();
        let chow = segre_p1xp2_chow_dual(&dual);
        // q_{ij} -> 2x2 minor of columns i, j of the same 2x6 Stiefel matrix
        let gr_for_sub = GrassmannRing::primal(3, 5).unwrap(); // rows = 2
        let a = gr_for_sub.stiefel_matrix();
        let images = gr_for_sub.pl_images(&a).unwrap();
        let expect = chow.substitute(a.ring(), &images).normalized();
        println!(
            "  matches 13-term substitution: {} ({:?})",
            h.polynomial == expect,
            t2.elapsed()
        );
    }
}
