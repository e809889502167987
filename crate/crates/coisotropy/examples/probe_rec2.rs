use coisotropy::coisotropic::coisotropic_form;
use coisotropy::fixtures::fermat_cubic;
use coisotropy::grassmann::GrassmannRing;
use coisotropy::ideal::Ideal;
use coisotropy::matrix::PolyMatrix;
use coisotropy::poly::Polynomial;
use coisotropy::ring::Ring;
use std::time::Instant;

fn main() {
    let x = fermat_cubic();
    let cf = coisotropic_form(&x, 1).unwrap();
    let q = &cf.form;
    let gr = GrassmannRing::primal(1, 3).unwrap();
    let n = 3usize;
    let chart = gr.chart(&[0, 1]).unwrap();
    let chart_ring = chart.ring().clone();
    let sm = gr.stiefel_matrix();
    let f_full = gr.compose_pl(q, &sm).unwrap();
    let cm = chart.matrix(&gr);
    let mut chart_images = Vec::new();
    for r in 0..2 {
        for c in 0..=n {
            chart_images.push(cm.entry(r, c).clone());
        }
    }
    let t0 = Instant::now();
    let mut jac_entries = Vec::new();
    for v in 0..2 * (n + 1) {
        let d = f_full.derivative(v);
        jac_entries.push(d.substitute(&chart_ring, &chart_images));
    }
    println!("jacobian entries in {:?}", t0.elapsed());
    for (v, e) in jac_entries.iter().enumerate() {
        println!("  entry {v}: degree {} terms {}", e.degree(), e.num_terms());
    }
    // combined ring
    let mut names = chart_ring.var_names().to_vec();
    names.extend((0..=n).map(|i| format!("y{i}")));
    let combined = Ring::new(names);
    let nchart = chart_ring.nvars();
    let cmap: Vec<usize> = (0..nchart).collect();
    let jac = PolyMatrix::new(
        2,
        n + 1,
        jac_entries.iter().map(|e| e.map_vars(&combined, &cmap)).collect(),
    );
    let mut yrow = PolyMatrix::zero(&combined, 1, n + 1);
    for j in 0..=n {
        yrow.set(0, j, Polynomial::var(&combined, nchart + j));
    }
    // variant: only J-row vs y minors (skip J-J)
    let mut gens = vec![chart.compose(&gr, q).map_vars(&combined, &cmap)];
    for r in 0..2 {
        let rowm = PolyMatrix::new(1, n + 1, jac.row(r).to_vec());
        let st = rowm.stack(&yrow);
        gens.extend(st.minors(2).unwrap());
    }
    println!("gens: {} of degrees {:?}", gens.len(), gens.iter().map(|g| g.degree()).collect::<Vec<_>>());
    let raw = Ideal::new(&combined, gens).unwrap();
    // single saturation timing
    let sat0 = jac_entries[0].map_vars(&combined, &cmap);
    let t1 = Instant::now();
    let s1 = raw.saturate(&sat0).unwrap();
    println!("first saturation in {:?}, gens {}", t1.elapsed(), s1.gens().len());
    let sat1 = jac_entries[1].map_vars(&combined, &cmap);
    let t2 = Instant::now();
    let s2 = s1.saturate(&sat1).unwrap();
    println!("second saturation in {:?}, gens {}", t2.elapsed(), s2.gens().len());
}
