//! Checks every stored example against a fresh computation.

use residua::catalog::{lookup, verify_entry};

fn main() -> residua::Result<()> {
    for name in ["jouanolou:1", "jouanolou:2", "degree2:1", "degree2:4", "pencil", "conic-pencil"] {
        let e = lookup(name)?;
        println!("{} ({}): {}", e.name, e.summary, e.foliation);
        for c in verify_entry(&e, 1e-8)? {
            let mark = if c.ok { "ok " } else { "BAD" };
            println!("  {mark} {:<28} expected {:<12} got {}", c.name, c.expected, c.actual);
        }
    }
    Ok(())
}
