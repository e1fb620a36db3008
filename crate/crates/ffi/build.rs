use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").expect("manifest dir");
    let out_path = PathBuf::from(env::var("OUT_DIR").expect("out dir")).join("supertwist.h");

    match cbindgen::generate(&crate_dir) {
        Ok(bindings) => {
            bindings.write_to_file(&out_path);
            // keep a copy in the crate for consumers who don't build from source
            let committed = PathBuf::from(&crate_dir)
                .join("include")
                .join("supertwist.h");
            if let Some(parent) = committed.parent() {
                let _ = std::fs::create_dir_all(parent);
            }
            bindings.write_to_file(&committed);
        }
        Err(e) => {
            // header generation is best-effort; the ABI itself still builds
            println!("cargo:warning=cbindgen failed: {e}");
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
