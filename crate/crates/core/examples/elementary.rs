// Elementary gradings: `deg E_ij = g_i^{-1} g_j`.

use graded_sl::groups::FinAbGroup;
use graded_sl::matalg::{elementary_grading, verify_assoc};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // k zeros and l ones in Z2: the identity component has dimension
    // k^2 + l^2, the other one 2kl.
    let z2 = FinAbGroup::cyclic(2)?;
    let (k, l) = (3, 2);
    let mut tuple = vec![z2.identity(); k];
    tuple.extend(vec![z2.elem(&[1])?; l]);
    let r = elementary_grading(&z2, k + l, &tuple)?;
    for (g, d) in r.dims() {
        println!("{g}: {d}");
    }
    assert_eq!(r.component(&z2.identity()).dim(), k * k + l * l);
    assert_eq!(r.component(&z2.elem(&[1])?).dim(), 2 * k * l);

    // A Z4 x Z2 tuple; the matrix units keep their names.
    let g = FinAbGroup::new(&[4, 2])?;
    let tuple = [g.identity(), g.elem(&[1, 0])?, g.elem(&[1, 1])?];
    let r = elementary_grading(&g, 3, &tuple)?;
    for h in r.support() {
        let names: Vec<String> = r.named_basis(&h).into_iter().map(|(s, _)| s).collect();
        println!("{h}: {}", names.join(" "));
    }
    let report = verify_assoc(&r);
    println!("{report}");
    assert!(report.passed());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
