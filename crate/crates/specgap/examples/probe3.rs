use rayon::prelude::*;
use specgap::families;
use specgap::graph::are_isomorphic;
use specgap::spectra;
use specgap::switching;

fn main() {
    let pi = std::f64::consts::PI;

    // criterion 3: upper bound for sampled n
    let mut worst: f64 = f64::NEG_INFINITY;
    for n in (14..=510usize).step_by(4) {
        let m = (n - 10) / 4;
        let g = families::cubic_gn(n).unwrap();
        let x = families::cosine_test_vector(n).unwrap();
        let rq = spectra::rayleigh_quotient(&g, &x).unwrap();
        let mf = m as f64;
        let bound = 4.0 * mf * (pi / (4.0 * mf)).sin().powi(2)
            / (mf + mf * (pi / (4.0 * mf)).cos().powi(2));
        worst = worst.max(rq - bound);
    }
    println!("criterion 3 worst (rq - bound) = {worst:.3e} (must be <= 1e-12)");

    // criterion 4: mu(G_n) >= mu(P_{2m+6})/2 - 1e-12, dense mu
    let t = std::time::Instant::now();
    let ns: Vec<usize> = (14..=510).step_by(4).collect();
    let margins: Vec<f64> = ns
        .par_iter()
        .map(|&n| {
            let m = (n - 10) / 4;
            let g = families::cubic_gn(n).unwrap();
            let mu = spectra::algebraic_connectivity(&g).unwrap();
            mu - spectra::path_mu_closed_form(2 * m + 6) / 2.0
        })
        .collect();
    let worst4 = margins.iter().cloned().fold(f64::INFINITY, f64::min);
    println!("criterion 4 worst margin = {worst4:.3e} (must be >= -1e-12), wall {:.1?}", t.elapsed());

    // criterion 10: Fiedler structure on cubic G_n
    let t = std::time::Instant::now();
    for n in (10..=102usize).step_by(2) {
        let (g, cells) = families::cubic_gn_with_cells(n).unwrap();
        let rep = spectra::spectral_report(&g).unwrap();
        let mut cell_vals = Vec::new();
        for cell in &cells.cells {
            let vals: Vec<f64> = cell.iter().map(|&v| rep.fiedler[v]).collect();
            let spread = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
                - vals.iter().cloned().fold(f64::INFINITY, f64::min);
            if spread >= 1e-8 {
                println!("n={n}: cell spread {spread:.2e} TOO BIG");
            }
            cell_vals.push(vals.iter().sum::<f64>() / vals.len() as f64);
        }
        let mut sign_changes = 0;
        for w in cell_vals.windows(2) {
            if w[1] >= w[0] {
                println!("n={n}: NOT strictly decreasing: {} -> {}", w[0], w[1]);
            }
            if (w[0] > 0.0) != (w[1] > 0.0) {
                sign_changes += 1;
            }
        }
        if sign_changes != 1 {
            println!("n={n}: sign changes = {sign_changes}");
        }
    }
    println!("criterion 10 scan done in {:.1?}", t.elapsed());

    // criterion 12: proper moves on conjectured quartic minimizers are isomorphism-stable
    let t = std::time::Instant::now();
    let mut total_moves = 0usize;
    for n in 11..=30usize {
        let g = families::conjectured_quartic_min(n).unwrap();
        let moves = switching::find_proper_switches(&g).unwrap();
        for mv in &moves {
            let h = switching::elementary_move(&g, mv).unwrap();
            if !are_isomorphic(&g, &h) {
                println!("n={n}: counterexample move {mv:?}");
            }
            total_moves += 1;
        }
    }
    println!("criterion 12: {total_moves} proper moves checked in {:.1?}", t.elapsed());
}
