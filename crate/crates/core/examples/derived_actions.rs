// Checks action triples: the self-action of an algebra, the action of an
// algebra on one of its ideals, and the naive self-action that fails.
//
// Run with `cargo run --example derived_actions`.

use std::error::Error;
use std::io::Write;
use std::sync::Arc;

use gwa::actions::{
    ideal_action, is_derived_action, is_derived_action_reduced, naive_self_action, self_action,
};
use gwa::algebra::{conjugation_gwa, identity_action_gwa, satisfies_reduced};
use gwa::enumeration::enumerate_ideals;
use gwa::GroupTable;

fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let fleet = [
        Arc::new(identity_action_gwa(&GroupTable::cyclic(3))?),
        Arc::new(identity_action_gwa(&GroupTable::klein_four())?),
        Arc::new(conjugation_gwa(&GroupTable::symmetric(3))?),
    ];
    for g in &fleet {
        let t = self_action(g)?;
        write!(
            out,
            "self-action of {}: {}",
            g.name(),
            is_derived_action(&t)
        )?;
        if satisfies_reduced(g) {
            write!(
                out,
                "  reduced conditions: {}",
                is_derived_action_reduced(&t)?
            )?;
        }
        for i in enumerate_ideals(g) {
            let t = ideal_action(&i)?;
            writeln!(
                out,
                "  on ideal {:?}: derived {}",
                i.indices(),
                is_derived_action(&t).ok
            )?;
        }
    }

    let z3 = fleet[0].clone();
    let naive = naive_self_action(&z3)?;
    write!(
        out,
        "naive self-action of {}:\n{}",
        z3.name(),
        is_derived_action(&naive)
    )?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut std::io::stdout().lock())
}
