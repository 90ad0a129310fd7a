use solvalg::format::{parse_poly, AlgebraFile};
use solvalg::verify::{check_graded_type, TypeVerdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let file = AlgebraFile::parse(
        "
field Q
gens a1:2 a2:1 a3:4
order gr(lex(a1>a2>a3))
rel a3*a1 = a1*a3 + a2^2*a3 + a2^6
",
    )?;
    let p = &file.presentation;
    let prod = p.mul(&parse_poly("a3", p)?, &parse_poly("a1^2", p)?)?;
    println!("{}", prod.display(p.names(), &file.ordering));

    let d = file.degree.unwrap();
    assert_eq!(check_graded_type(p, &d)?.verdict, TypeVerdict::Graded);
    Ok(())
}
