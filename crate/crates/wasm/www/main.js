// Expects the wasm-bindgen output (--target web) in ./pkg
import init, { evaluate, expandSurd, exploreCn } from "./pkg/surdcf_wasm.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("err");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e);
  }
}

function evalText(r) {
  const lines = [
    `expansion  ${r.expansion}`,
    `value      ${r.value.text}`,
    `decimal    ${r.value.decimal}`,
    `2a         ${r.two_a}`,
  ];
  if (r.epsilon !== null) lines.push(`epsilon    ${r.epsilon}`);
  lines.push("convergents");
  for (const c of r.convergents) lines.push(`  ${String(c.k).padStart(3)}  ${c.p} / ${c.q}`);
  return lines.join("\n");
}

function cnTable(r) {
  const { a, b, c } = r.polynomial;
  $("cn-poly").textContent = `disc(c_n) = ${a} c_n^2 + ${b} c_n + ${c}, irrational part sqrt(disc) / ${r.denominator}`;
  const table = $("cn-table");
  table.replaceChildren();
  const head = table.insertRow();
  for (const h of ["c_n", "2a", "epsilon", "disc", "value"]) {
    const th = document.createElement("th");
    th.textContent = h;
    head.appendChild(th);
  }
  for (const row of r.rows) {
    const tr = table.insertRow();
    for (const v of [row.cn, row.two_a, row.epsilon, row.discriminant, row.value]) tr.insertCell().textContent = v;
  }
}

await init();

$("eval-form").onsubmit = (e) => {
  e.preventDefault();
  show($("eval-out"), () => evalText(JSON.parse(evaluate($("eval-input").value))));
};

$("expand-form").onsubmit = (e) => {
  e.preventDefault();
  show($("expand-out"), () => {
    const r = JSON.parse(expandSurd($("expand-input").value));
    return `${r.expansion}\npreperiod ${r.preperiod}, period ${r.period}\n${r.value.decimal}`;
  });
};

$("cn-form").onsubmit = (e) => {
  e.preventDefault();
  try {
    cnTable(JSON.parse(exploreCn($("cn-prefix").value, Number($("cn-max").value))));
  } catch (err) {
    $("cn-poly").textContent = String(err);
    $("cn-table").replaceChildren();
  }
};

for (const f of ["eval-form", "expand-form", "cn-form"]) $(f).requestSubmit();
