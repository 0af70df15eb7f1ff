// Counts the self-actions of small groups and prints the ones on S3.
//
// Run with `cargo run --example enumerate_self_actions`.

use std::error::Error;
use std::io::Write;

use gwa::algebra::satisfies_reduced;
use gwa::enumeration::enumerate_self_actions;
use gwa::GroupTable;

fn run(out: &mut dyn Write) -> Result<(), Box<dyn Error>> {
    let groups = [
        GroupTable::cyclic(2),
        GroupTable::cyclic(3),
        GroupTable::cyclic(4),
        GroupTable::klein_four(),
        GroupTable::symmetric(3),
        GroupTable::dihedral(4),
    ];
    for g in &groups {
        let all = enumerate_self_actions(g);
        let reduced = all.iter().filter(|a| satisfies_reduced(a)).count();
        writeln!(
            out,
            "{:<4} {} self-actions, {} reduced",
            g.name(),
            all.len(),
            reduced
        )?;
    }
    for a in enumerate_self_actions(&GroupTable::symmetric(3)) {
        writeln!(out, "{}: {:?}", a.name(), a.act_rows())?;
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run(&mut std::io::stdout().lock())
}
