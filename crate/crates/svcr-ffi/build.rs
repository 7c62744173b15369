use std::env;
use std::path::PathBuf;

#[allow(clippy::field_reassign_with_default)]
fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").unwrap();
    let out = PathBuf::from(&crate_dir).join("include/svcr.h");

    let mut config = cbindgen::Config::default();
    config.cpp_compat = true;
    config.documentation = true;

    cbindgen::Builder::new()
        .with_config(config)
        .with_crate(&crate_dir)
        .with_language(cbindgen::Language::C)
        .with_include_guard("SVCR_H")
        .generate()
        .expect("unable to generate bindings")
        .write_to_file(out);

    println!("cargo:rerun-if-changed=src/lib.rs");
}
