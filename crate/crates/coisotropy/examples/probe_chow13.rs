use coisotropy::coisotropic::coisotropic_form;
use coisotropy::fixtures::segre_p1xp2_chow_dual;
use coisotropy::grassmann::GrassmannRing;
use coisotropy::poly::{Monomial, Polynomial};
use coisotropy::segre::segre_ideal;
use num_rational::BigRational;

fn permute_dual(f: &Polynomial, gr: &GrassmannRing, sigma: &[usize]) -> Polynomial {
    let ring = gr.ring().clone();
    let terms: Vec<(Monomial, BigRational)> = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = vec![0u32; gr.nvars()];
            let mut coeff = c.clone();
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let t = gr.tuple(v);
                let (mut a, mut b) = (sigma[t[0]], sigma[t[1]]);
                let mut sign = 1i32;
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                    sign = -1;
                }
                let nv = gr.var_of_tuple(&[a, b]).unwrap();
                exps[nv] += e;
                if sign < 0 && e % 2 == 1 {
                    coeff = -coeff;
                }
            }
            (Monomial::new(exps), coeff)
        })
        .collect();
    Polynomial::from_terms(&ring, terms)
}

fn main() {
    let x = segre_ideal(&[1, 2]).unwrap();
    let cf = coisotropic_form(&x, 0).unwrap();
    println!("chow: degree {} terms {}", cf.degree, cf.form.num_terms());
    let dualform = cf.grassmann.primal_to_dual(&cf.form).unwrap().normalized();
    let dual = GrassmannRing::dual(1, 5).unwrap();
    let display = segre_p1xp2_chow_dual(&dual).normalized();
    println!("computed dual-coords Chow form:\n  {}", dualform);
    println!("paper display:\n  {}", display);
    let red = |p: &Polynomial| dual.reduce_mod_relations(p).unwrap();
    println!("reduced display == computed: {}", red(&display) == dualform);
    let sigma = [0usize, 2, 4, 1, 3, 5];
    println!(
        "reduced sigma-permuted == computed: {}",
        red(&permute_dual(&display, &dual, &sigma)) == dualform
    );
    let inv = [0usize, 3, 1, 4, 2, 5];
    println!(
        "reduced inverse-permuted == computed: {}",
        red(&permute_dual(&display, &dual, &inv)) == dualform
    );
}
