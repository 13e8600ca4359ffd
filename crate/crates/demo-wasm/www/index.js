import init, { rank_ballots, score_matrix, alpha_sweep } from "./pkg/dsr_demo_wasm.js";

const SAMPLES = {
  cycle: "alternatives: x,y,z,u\n1: x > y > z > u\n1: y > z > u > x\n1: z > u > x > y\n",
  approval: "alternatives: a,b,c\n4: approve {a}\n2: approve {b}\n1: approve {b,c}\n4: approve {c}\n",
  tournament: "4\nlabels: a b c d\n 0  1  1 -1\n-1  0  1  1\n-1 -1  0  1\n 1 -1 -1  0\n",
  triangle: "3\nlabels: a b c\n 0  1  0\n-1  0  1\n 0 -1  0\n",
};
const STEPS = 12;
const COLORS = ["#1b6ca8", "#d1495b", "#2e933c", "#edae49", "#6b4e9b", "#00798c", "#8d6a3f", "#444"];

const $ = (id) => document.getElementById(id);

function gcd(a, b) {
  return b === 0 ? a : gcd(b, a % b);
}

function alphaText() {
  const k = Number($("alpha").value);
  const g = gcd(k, STEPS);
  return k === 0 ? "0" : `${k / g}/${STEPS / g}`;
}

function isBallots(text) {
  const first = text.split("\n").map((l) => l.split("#")[0].trim()).find((l) => l !== "");
  return first === undefined || first.startsWith("alternatives");
}

function cell(tag, text) {
  const el = document.createElement(tag);
  el.textContent = text;
  return el;
}

function renderTable(doc) {
  const table = document.createElement("table");
  const head = document.createElement("tr");
  head.append(cell("th", "pivot"), cell("th", "partition"), ...doc.alternatives.map((a) => cell("th", a)));
  table.append(head);
  for (const p of doc.pivots) {
    const tr = document.createElement("tr");
    tr.append(cell("td", p.pivot), cell("td", p.partition ? p.partition.rendered : "none"));
    for (const s of p.scores) tr.append(cell("td", s.value));
    table.append(tr);
  }
  const total = document.createElement("tr");
  total.append(cell("th", "ψ"), cell("th", ""), ...doc.totals.map((t) => cell("th", t.value)));
  table.append(total);
  return table;
}

function renderResult(doc) {
  const out = $("result");
  out.replaceChildren();
  out.append(cell("p", `majority relation: ${doc.relation.pairs}`), renderTable(doc));
  const ranking = doc.ranking.map((tier) => tier.join(" ∼ ")).join(" ≻ ");
  out.append(cell("p", `ranking: ${ranking}    winners: {${doc.winners.join(",")}}`));
  const c = doc.comparison;
  const lines = [
    `Copeland winners: {${c.copeland.winners.join(",")}}`,
    `uncovered set: ${c.uncovered_set ? "{" + c.uncovered_set.join(",") + "}" : "n/a (ties present)"}`,
    `Smith set: {${c.smith_set.join(",")}}    Schwartz set: {${c.schwartz_set.join(",")}}`,
  ];
  for (const l of lines) out.append(cell("p", l));
}

function svg(tag, attrs) {
  const el = document.createElementNS("http://www.w3.org/2000/svg", tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  return el;
}

function renderChart(sweep) {
  const chart = $("chart");
  chart.replaceChildren();
  const [w, h, pad] = [640, 280, 36];
  const max = Math.max(1, ...sweep.points.flatMap((p) => p.totals_float));
  const x = (a) => pad + a * (w - 2 * pad - 60);
  const y = (v) => h - pad - (v / max) * (h - 2 * pad);
  chart.append(svg("line", { x1: pad, y1: h - pad, x2: x(1), y2: h - pad, stroke: "#888" }));
  chart.append(svg("line", { x1: pad, y1: pad, x2: pad, y2: h - pad, stroke: "#888" }));
  for (const a of [0, 0.5, 1]) {
    const t = svg("text", { x: x(a) - 6, y: h - pad + 16 });
    t.textContent = String(a);
    chart.append(t);
  }
  const top = svg("text", { x: 4, y: y(max) + 4 });
  top.textContent = max.toFixed(1);
  chart.append(top);
  const marker = svg("line", { x1: x(Number($("alpha").value) / STEPS), x2: x(Number($("alpha").value) / STEPS), y1: pad, y2: h - pad, stroke: "#bbb", "stroke-dasharray": "4 3" });
  chart.append(marker);
  sweep.alternatives.forEach((name, i) => {
    const color = COLORS[i % COLORS.length];
    const pts = sweep.points.map((p) => `${x(p.alpha_float)},${y(p.totals_float[i])}`).join(" ");
    chart.append(svg("polyline", { points: pts, fill: "none", stroke: color, "stroke-width": 2 }));
    const last = sweep.points[sweep.points.length - 1];
    const label = svg("text", { x: x(1) + 6, y: y(last.totals_float[i]) + 4 + i * 2, fill: color });
    label.textContent = name;
    chart.append(label);
  });
}

function update() {
  $("alpha-label").textContent = alphaText();
  const text = $("input").value;
  $("error").textContent = "";
  try {
    const doc = JSON.parse(isBallots(text) ? rank_ballots(text, alphaText()) : score_matrix(text, alphaText()));
    renderResult(doc);
    renderChart(JSON.parse(alpha_sweep(text, STEPS)));
  } catch (e) {
    $("result").replaceChildren();
    $("chart").replaceChildren();
    $("error").textContent = String(e);
  }
}

await init();
for (const b of document.querySelectorAll("[data-sample]")) {
  b.addEventListener("click", () => {
    $("input").value = SAMPLES[b.dataset.sample];
    update();
  });
}
$("alpha").addEventListener("input", update);
$("score").addEventListener("click", update);
$("input").value = SAMPLES.cycle;
update();
