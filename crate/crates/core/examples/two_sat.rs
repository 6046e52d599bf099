//! Solve 2SAT formulas built in code or read from DIMACS text.

use chore_orient::twosat::{Literal, TwoSatFormula};

fn main() -> chore_orient::Result<()> {
    let mut formula = TwoSatFormula::new(3);
    formula.add_clause(Literal::positive(0), Literal::positive(1))?;
    formula.add_clause(Literal::negative(0), Literal::positive(2))?;
    formula.add_unit(Literal::negative(2))?;
    match formula.solve() {
        Some(a) => println!("satisfiable: {:?}", a.values()),
        None => println!("unsatisfiable"),
    }

    let contradiction = TwoSatFormula::from_dimacs("p cnf 1 2\n1 0\n-1 0\n")?;
    println!(
        "x and not x: {:?}",
        contradiction.solve().map(|a| a.into_values())
    );
    Ok(())
}
