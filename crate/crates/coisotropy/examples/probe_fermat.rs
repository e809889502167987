use coisotropy::poly::Polynomial;
use coisotropy::ring::Ring;
use coisotropy::variety::{polar_degrees, ProjectiveVariety};
use std::time::Instant;

fn main() {
    let r = Ring::projective(3);
    let xv = |i| Polynomial::var(&r, i);
    let f = xv(0).pow(3).add(&xv(1).pow(3)).add(&xv(2).pow(3)).add(&xv(3).pow(3));
    let x = ProjectiveVariety::from_generators(3, vec![f]).unwrap();

    let t0 = Instant::now();
    let conormal = x.conormal_ideal().unwrap();
    println!("conormal: {} gens in {:?}", conormal.gens().len(), t0.elapsed());

    let t1 = Instant::now();
    let pd = polar_degrees(&x, 7).unwrap();
    println!("polar degrees: {:?} in {:?}", pd, t1.elapsed());

    let t2 = Instant::now();
    let dual = x.dual_variety_ideal().unwrap();
    println!("dual: {} gens in {:?}", dual.gens().len(), t2.elapsed());
    for g in dual.gens() {
        println!("  degree {} with {} terms", g.degree(), g.num_terms());
    }
}
