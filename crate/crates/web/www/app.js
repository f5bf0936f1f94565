import init, { branch, interval, generic } from "./pkg/depthzero_web.js";

const SVG = "http://www.w3.org/2000/svg";

function el(name, attrs = {}, text) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

function fail(target, err) {
  target.replaceChildren();
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(err);
  target.append(p);
}

function drawBars(target, bars) {
  const w = 42, gap = 10, h = 160, pad = 30;
  const max = Math.max(1, ...bars.map((b) => b.multiplicity));
  const svg = el("svg", { width: pad + bars.length * (w + gap), height: h + 60 });
  bars.forEach((b, i) => {
    const x = pad + i * (w + gap);
    const bh = (b.multiplicity / max) * h;
    svg.append(el("rect", { x, y: 10 + h - bh, width: w, height: bh, fill: "#4a78b5" }));
    svg.append(el("text", { x: x + w / 2, y: 6 + h - bh, "text-anchor": "middle" }, b.multiplicity));
    svg.append(el("text", { x: x + w / 2, y: h + 26, "text-anchor": "middle" }, b.partition));
  });
  target.replaceChildren(svg);
}

function runBranch() {
  const meta = document.getElementById("branch-meta");
  const out = document.getElementById("branch-out");
  try {
    const v = JSON.parse(branch(document.getElementById("branch-in").value));
    meta.textContent =
      `P(a) = ${v.top}   dual = ${v.dual}   P(dual)' = ${v.dual_partition}` +
      (v.dual_is_minimum ? " (minimum)" : "") +
      `   ⟨a⟩ = ` + v.expansion.map(([b, c]) => `${c > 0 ? "+" : "−"}${Math.abs(c)}·π(${b})`).join(" ");
    drawBars(out, v.bars);
  } catch (e) {
    meta.textContent = "";
    fail(out, e);
  }
}

function runPoset() {
  const out = document.getElementById("poset-out");
  try {
    const v = JSON.parse(interval(document.getElementById("poset-in").value));
    const levels = [];
    v.nodes.forEach((n, i) => (levels[n.level] ??= []).push(i));
    const colW = 190, rowH = 70;
    const width = Math.max(...levels.map((l) => l.length)) * colW;
    const pos = [];
    levels.forEach((ids, lvl) => {
      ids.forEach((id, k) => {
        pos[id] = { x: (width / (ids.length + 1)) * (k + 1), y: 24 + lvl * rowH };
      });
    });
    const svg = el("svg", { width, height: levels.length * rowH + 10 });
    for (const [i, j] of v.edges) {
      svg.append(el("line", { x1: pos[i].x, y1: pos[i].y + 6, x2: pos[j].x, y2: pos[j].y - 14, stroke: "#999" }));
    }
    v.nodes.forEach((n, i) => {
      svg.append(el("text", { x: pos[i].x, y: pos[i].y, "text-anchor": "middle" }, n.label));
      svg.append(el("text", { x: pos[i].x, y: pos[i].y + 14, "text-anchor": "middle", fill: n.m > 1 ? "#b00020" : "#4a78b5" }, `m = ${n.m}`));
    });
    out.replaceChildren(svg);
  } catch (e) {
    fail(out, e);
  }
}

function runGeneric() {
  const out = document.getElementById("generic-out");
  try {
    const v = JSON.parse(generic(document.getElementById("generic-in").value));
    const table = document.createElement("table");
    table.innerHTML = "<tr><th>μ</th><th>multiplicity</th></tr>";
    for (const [mu, c] of v.rows) {
      const tr = document.createElement("tr");
      const a = document.createElement("td");
      const b = document.createElement("td");
      a.textContent = mu + (mu === v.top ? "  (top)" : "");
      b.textContent = c;
      if (c === 0) b.className = "zero";
      tr.append(a, b);
      table.append(tr);
    }
    out.replaceChildren(table);
  } catch (e) {
    fail(out, e);
  }
}

await init();
for (const [id, fn] of [["branch", runBranch], ["poset", runPoset], ["generic", runGeneric]]) {
  document.getElementById(`${id}-go`).addEventListener("click", fn);
  document.getElementById(`${id}-in`).addEventListener("keydown", (e) => e.key === "Enter" && fn());
  fn();
}
