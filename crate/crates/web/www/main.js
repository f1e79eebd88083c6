// Build: cargo build -p hopfcomb-web --target wasm32-unknown-unknown --release, then
// wasm-bindgen --target web --out-dir crates/web/www/pkg target/wasm32-unknown-unknown/release/hopfcomb_web.wasm
import init, { algebras, product, coproduct, stalactic_insert } from "./pkg/hopfcomb_web.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("error");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("error");
    out.textContent = String(e);
  }
}

await init();

for (const line of algebras().split("\n")) {
  const [alg, basis] = line.split(" ");
  const opt = document.createElement("option");
  opt.value = line;
  opt.textContent = `${alg} (${basis})`;
  $("algebra").append(opt);
}

const target = () => $("algebra").value.split(" ");

$("product").onclick = () =>
  show($("algebra-out"), () => product(...target(), $("elements").value));
$("coproduct").onclick = () =>
  show($("algebra-out"), () => coproduct(...target(), $("elements").value));
$("insert").onclick = () => show($("insert-out"), () => stalactic_insert($("word").value));
