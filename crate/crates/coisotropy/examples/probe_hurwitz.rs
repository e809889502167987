use coisotropy::coisotropic::coisotropic_form;
use coisotropy::fixtures::{fermat_cubic, fermat_hurwitz_primal};
use std::time::Instant;

fn main() {
    let x = fermat_cubic();
    let t0 = Instant::now();
    let cf = coisotropic_form(&x, 1).unwrap();
    println!(
        "Fermat Hurwitz: degree {} with {} terms in {:?}",
        cf.degree,
        cf.form.num_terms(),
        t0.elapsed()
    );
    let expected = cf
        .grassmann
        .reduce_mod_relations(&fermat_hurwitz_primal(&cf.grassmann))
        .unwrap();
    println!("matches paper form: {}", cf.form == expected);
}
