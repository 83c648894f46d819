// Clock and shift matrices over Q(zeta_n) and the relations they satisfy.

use graded_sl::cyclo::{Mat, Subspace};
use graded_sl::matalg::EpsilonSeed;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in [2, 3, 4, 6] {
        let seed = EpsilonSeed::new(n)?;
        let (xa, xb) = (&seed.x_a, &seed.x_b);
        let lhs = &(xa * xb) * &xa.inverse()?;
        assert_eq!(lhs, xb.scale(&seed.epsilon));
        assert_eq!(xa.pow(n as u32), Mat::identity(n));
        assert_eq!(xb.pow(n as u32), Mat::identity(n));

        let monomials: Vec<Mat> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| seed.monomial(i, j))
            .collect();
        let span = Subspace::span_mats(n, monomials.iter())?;
        println!(
            "n = {n}: epsilon = {}, monomials span dimension {}",
            seed.epsilon,
            span.dim()
        );
        assert_eq!(span.dim(), n * n);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
