// Ordering of ρ_0, ρ_1, ρ_2 for a four-ring over the (a2, a3) plane at
// a1 = 0, drawn as a character map.

use ringhopf::spectral::CouplingCoefficients;

fn ordering(c: &CouplingCoefficients) -> Option<[usize; 3]> {
    let mut idx = [0, 1, 2];
    idx.sort_by(|&i, &j| c.rho(j).total_cmp(&c.rho(i)));
    let tied = idx.windows(2).any(|w| (c.rho(w[0]) - c.rho(w[1])).abs() <= c.zero_tolerance());
    (!tied).then_some(idx)
}

pub fn run_example() -> ringhopf::Result<()> {
    let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let glyphs = ['A', 'B', 'C', 'D', 'E', 'F'];
    let side = 41;
    for row in 0..side {
        let a3 = 1.0 - 2.0 * row as f64 / (side - 1) as f64;
        let line: String = (0..side)
            .map(|col| {
                let a2 = -1.0 + 2.0 * col as f64 / (side - 1) as f64;
                let c = CouplingCoefficients::new(vec![0.0, 0.0, a2, a3], false).expect("four coefficients");
                match ordering(&c) {
                    Some(o) => glyphs[orders.iter().position(|x| *x == o).expect("permutation")],
                    None => '.',
                }
            })
            .collect();
        println!("{line}");
    }
    for (g, o) in glyphs.iter().zip(orders) {
        println!("{g}: ρ_{} > ρ_{} > ρ_{}", o[0], o[1], o[2]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> ringhopf::Result<()> {
    run_example()
}
