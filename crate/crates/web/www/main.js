import init, { bound_series, check_params, explore_graph } from "./pkg/pgq_web.js";

const SERIES = [
  { key: "neumaier", label: "Neumaier t(t+1)(t+2)/2", colour: "#b3261e" },
  { key: "four_term_value", label: "optimal four-term bound", colour: "#1f5fbf" },
  { key: "quadratic", label: "t floor(8t/3 + 1)", colour: "#17753a", dashed: true },
  { key: "t_squared", label: "t^2 (GQ limit)", colour: "#888" },
];

const $ = (id) => document.getElementById(id);

function escape(text) {
  return String(text).replace(/[&<>"]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;" })[c]);
}

function table(rows) {
  return "<table>" + rows.map((r) => "<tr>" + r.map((c) => `<td>${c}</td>`).join("") + "</tr>").join("") + "</table>";
}

function drawBounds(rows) {
  const canvas = $("plot");
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  const pad = { left: 60, right: 15, top: 15, bottom: 35 };
  ctx.clearRect(0, 0, width, height);

  const tMin = rows[0].t, tMax = rows[rows.length - 1].t;
  const yMax = Math.log10(Math.max(...rows.map((r) => r.neumaier)));
  const x = (t) => pad.left + ((t - tMin) / Math.max(1, tMax - tMin)) * (width - pad.left - pad.right);
  const y = (v) => height - pad.bottom - (Math.log10(v) / yMax) * (height - pad.top - pad.bottom);

  ctx.strokeStyle = "#ccc";
  ctx.fillStyle = "#555";
  ctx.font = "12px system-ui";
  for (let e = 0; e <= Math.ceil(yMax); e++) {
    const yy = y(10 ** e);
    if (yy < pad.top) break;
    ctx.beginPath(); ctx.moveTo(pad.left, yy); ctx.lineTo(width - pad.right, yy); ctx.stroke();
    ctx.fillText(`1e${e}`, 10, yy + 4);
  }
  const step = Math.max(1, Math.round((tMax - tMin) / 10));
  for (let t = tMin; t <= tMax; t += step) ctx.fillText(String(t), x(t) - 4, height - 12);
  ctx.fillText("t", width - pad.right - 10, height - 12);

  for (const s of SERIES) {
    ctx.strokeStyle = s.colour;
    ctx.lineWidth = 2;
    ctx.setLineDash(s.dashed ? [6, 4] : []);
    ctx.beginPath();
    rows.forEach((r, i) => (i ? ctx.lineTo : ctx.moveTo).call(ctx, x(r.t), y(r[s.key])));
    ctx.stroke();
  }
  ctx.setLineDash([]);
}

function renderBounds() {
  const tMax = Number($("tmax").value);
  $("tmax-label").textContent = tMax;
  const rows = JSON.parse(bound_series(tMax));
  drawBounds(rows);
  const head = ["t", "t^2", "four-term", "(theta, beta)", "quadratic", "Neumaier"].map((h) => `<b>${h}</b>`);
  const body = rows.slice(-8).map((r) => [r.t, r.t_squared, r.four_term, `(${r.theta}, ${r.beta})`, r.quadratic, r.neumaier]);
  $("bound-table").innerHTML = table([head, ...body]);
}

function renderCheck(event) {
  event?.preventDefault();
  try {
    const r = JSON.parse(check_params(Number($("s").value), Number($("t").value)));
    const rows = r.verdicts.map((c) => [escape(c.name), `<span class="${c.verdict}">${c.verdict}</span>`, escape(c.witness)]);
    $("check-out").innerHTML =
      `<p>srg(${r.v}, ${r.k}, ${r.lambda}, ${r.mu}): <b>${r.classification}</b></p>` + table(rows);
  } catch (e) {
    $("check-out").innerHTML = `<p class="error">${escape(e.message ?? e)}</p>`;
  }
}

function renderGraph(event) {
  event?.preventDefault();
  const name = $("graph-name").value;
  const sized = name === "rook" || name === "bipartite";
  $("graph-m").disabled = !sized;
  try {
    const g = JSON.parse(explore_graph(name, sized ? Number($("graph-m").value) : 0));
    const rows = [["vertices", g.vertices], ["edges", g.edges]];
    rows.push(["strongly regular", g.srg ? `srg(${g.srg.join(", ")})` : escape(g.srg_error)]);
    if (g.gq_form) rows.push(["GQ form", `(s, t) = (${g.gq_form.join(", ")}); t + 1 = ${g.gq_form[1] + 1}`]);
    rows.push(["claw numbers", Object.entries(g.claws).map(([c, n]) => `${n} vertices with ${c}`).join(", ")]);
    if (g.lines !== null) rows.push(["lines", `<span class="pass">${g.lines} lines recovered; generalized quadrangle</span>`]);
    if (g.extraction_error) rows.push(["lines", `<span class="fail">${escape(g.extraction_error)}</span>`]);
    $("graph-out").innerHTML = table(rows);
  } catch (e) {
    $("graph-out").innerHTML = `<p class="error">${escape(e.message ?? e)}</p>`;
  }
}

await init();
$("legend").innerHTML = SERIES.map((s) => `<span style="color:${s.colour}">&#9632; ${s.label}</span>`).join("");
$("tmax").addEventListener("input", renderBounds);
$("check-form").addEventListener("submit", renderCheck);
$("graph-form").addEventListener("submit", renderGraph);
$("graph-name").addEventListener("change", renderGraph);
renderBounds();
renderCheck();
renderGraph();
