// The JSON interchange format used by the command line.

use graded_sl::cli::json::{grading_to_json, parse_grading_text, to_canonical_string, GradingFile};
use graded_sl::cli::verify_file;
use graded_sl::invol::canonical_l6;
use graded_sl::liegrad::type2;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = canonical_l6(2)?;
    let h = d.grading.group().elem(&[1, 1])?;
    let l = type2(&d.grading, &d.involution, &h)?;

    let text = to_canonical_string(&grading_to_json(&GradingFile::plain(l)));
    print!("{text}");
    let back = parse_grading_text(&text)?;
    assert_eq!(to_canonical_string(&grading_to_json(&back)), text);
    assert!(verify_file(&back)?.passed());

    let inv_text = to_canonical_string(&grading_to_json(&GradingFile::from_involution(d)));
    let inv_back = parse_grading_text(&inv_text)?;
    println!("involution file: {} bytes, {}", inv_text.len(), verify_file(&inv_back)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
