// Built with: wasm-pack build crates/wasm --target web --out-dir www/pkg
import init, { cayley, identityMap, structure } from "./pkg/ggl_wasm.js";

const $ = (id) => document.getElementById(id);

function fail(el, e) {
  el.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(e.message ?? e);
  el.appendChild(p);
}

// products shaded by value, so the Latin-square pattern of prime moduli shows
function drawTable() {
  const out = $("t-out");
  try {
    const { labels, table } = JSON.parse(cayley($("t-carrier").value, $("t-shape").value, $("t-pair").value));
    const n = labels.length;
    let html = '<table class="grid"><tr><th>*</th>' + labels.map((l) => `<th>${l}</th>`).join("") + "</tr>";
    table.forEach((row, i) => {
      html += `<tr><th>${labels[i]}</th>`;
      row.forEach((k, j) => {
        const light = 95 - Math.round((60 * k) / Math.max(1, n - 1));
        html += `<td style="background:hsl(210,60%,${light}%)" title="${labels[i]} * ${labels[j]}">${labels[k]}</td>`;
      });
      html += "</tr>";
    });
    out.innerHTML = html + "</table>";
  } catch (e) {
    fail(out, e);
  }
}

function drawMap() {
  const out = $("m-out");
  try {
    const { n, cells } = JSON.parse(identityMap($("m-carrier").value, $("m-id").value));
    let html = '<table class="grid"><tr><th>t\\u</th>';
    for (let u = 0; u < n; u++) html += `<th>${u}</th>`;
    html += "</tr>";
    cells.forEach((row, t) => {
      html += `<tr><th>${t}</th>`;
      row.forEach((c, u) => {
        const cls = c === null ? "none" : c ? "holds" : "fails";
        html += `<td class="${cls}" title="(${t},${u})"></td>`;
      });
      html += "</tr>";
    });
    out.innerHTML = html + "</table>";
  } catch (e) {
    fail(out, e);
  }
}

function drawStructure() {
  const out = $("s-out");
  try {
    out.textContent = JSON.stringify(JSON.parse(structure($("s-carrier").value, $("s-pair").value)), null, 2);
  } catch (e) {
    out.textContent = String(e.message ?? e);
  }
}

await init();
$("t-go").onclick = drawTable;
$("m-go").onclick = drawMap;
$("s-go").onclick = drawStructure;
drawTable();
drawMap();
drawStructure();
