// Builds groups with action, checks the axioms and reducedness, and shows
// the report for a broken action table.
//
// Run with `cargo run --example validate_algebra`.

use std::error::Error;
use std::io::Write;

use gwa::algebra::{conjugation_gwa, identity_action_gwa, is_reduced, validate_gwa};
use gwa::{FiniteGwa, GroupTable};

fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let groups = [
        GroupTable::cyclic(4),
        GroupTable::klein_four(),
        GroupTable::symmetric(3),
        GroupTable::dihedral(4),
    ];
    for g in &groups {
        for a in [identity_action_gwa(g)?, conjugation_gwa(g)?] {
            writeln!(
                out,
                "{:<10} order {}  object: {}  reduced: {}",
                a.name(),
                a.order(),
                validate_gwa(&a).ok,
                is_reduced(&a).ok
            )?;
        }
    }

    // 1^1 = 0 on Z2.
    let broken = FiniteGwa::from_group(GroupTable::cyclic(2), vec![0, 0, 1, 0])?;
    write!(out, "broken Z2:\n{}", validate_gwa(&broken))?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut std::io::stdout().lock())
}
