import init, { catalog, verify, convergence_table, custom_table } from "./pkg/pitelescope_web.js";

const $ = (id) => document.getElementById(id);

function call(f, ...args) {
  try {
    return [JSON.parse(f(...args)), null];
  } catch (e) {
    return [null, String(e)];
  }
}

function showIdentity(entries) {
  const e = entries.find((e) => e.id === $("entry").value);
  $("identity").textContent = `${e.provenance}\n${e.params}\n\n${e.identity}`;
}

function runVerify() {
  const [r, err] = call(verify, $("entry").value, Number($("digits").value));
  if (err) {
    $("verdict").innerHTML = `<p class="err">${err}</p>`;
    return;
  }
  const cls = r.pass ? "pass" : "fail";
  $("verdict").innerHTML =
    `<p class="${cls}">${r.pass ? "PASS" : "FAIL"}: series ${r.approx}, printed value ${r.target}, ` +
    `error ${r.abs_error} (estimate ${r.error_estimate}, ${r.levels} levels)</p>`;
}

// log10 errors on a shared axis; partial sums grey, extrapolation blue
function plot(rows) {
  const w = 560, h = 260, pad = 36;
  const ys = rows.flatMap((r) => [r.partial, r.richardson]).filter((v) => v !== null);
  const lo = Math.floor(Math.min(...ys)), hi = Math.ceil(Math.max(...ys, 0));
  const px = (i) => pad + (i * (w - 2 * pad)) / Math.max(rows.length - 1, 1);
  const py = (v) => pad / 2 + ((hi - v) * (h - pad)) / Math.max(hi - lo, 1);
  const line = (key, color) => {
    const pts = rows.map((r, i) => (r[key] === null ? null : `${px(i)},${py(r[key])}`)).filter(Boolean);
    return `<polyline fill="none" stroke="${color}" stroke-width="2" points="${pts.join(" ")}"/>`;
  };
  let ticks = "";
  const step = Math.max(1, Math.ceil((hi - lo) / 8));
  for (let v = hi; v >= lo; v -= step) {
    ticks += `<text x="4" y="${py(v) + 4}" font-size="11">1e${v}</text>`;
    ticks += `<line x1="${pad}" x2="${w - pad}" y1="${py(v)}" y2="${py(v)}" stroke="#eee"/>`;
  }
  return `<svg width="${w}" height="${h}">${ticks}${line("partial", "#999")}${line("richardson", "#1f5fbf")}</svg>`;
}

function showTable([r, err]) {
  if (err) {
    $("convergence").innerHTML = `<p class="err">${err}</p>`;
    return;
  }
  const fmt = (v) => (v === null ? "exact" : `1e${v.toFixed(1)}`);
  const body = r.rows
    .map((row) => `<tr><td>${row.terms}</td><td>${fmt(row.partial)}</td><td>${fmt(row.richardson)}</td></tr>`)
    .join("");
  $("convergence").innerHTML =
    `<p>${r.params}, sum ≈ ${r.target}</p>` +
    `<table><tr><th>terms</th><th>partial sum error</th><th>extrapolated error</th></tr>${body}</table>` +
    plot(r.rows);
}

await init();
const [entries] = call(catalog);
for (const e of entries) {
  const opt = document.createElement("option");
  opt.value = e.id;
  opt.textContent = `${e.id}  (${e.provenance})`;
  $("entry").append(opt);
}
$("entry").value = "t1.ex9";
showIdentity(entries);
$("entry").addEventListener("change", () => showIdentity(entries));
$("verify").addEventListener("click", runVerify);
$("table").addEventListener("click", () => showTable(call(convergence_table, $("entry").value, Number($("levels").value))));
$("custom").addEventListener("click", () =>
  showTable(call(custom_table, $("family").value, $("x").value, $("p").value, $("q").value, $("r").value, Number($("levels").value))),
);
