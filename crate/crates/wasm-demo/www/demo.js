import init, { stability_map, hardy_curve, cutoff_profile } from "./pkg/equator_wasm_demo.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function call(fn, outId, ...args) {
  const data = JSON.parse(fn(...args));
  const out = $(outId);
  out.classList.toggle("err", "error" in data);
  if ("error" in data) {
    out.textContent = data.error;
    return null;
  }
  return data;
}

function axes(ctx, w, h) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#888";
  ctx.strokeRect(40, 10, w - 50, h - 40);
}

// Maps data coordinates into the plot box; y optionally log-scaled.
function scaler(w, h, xs, ys, logY) {
  const fy = logY ? (v) => Math.log10(Math.max(v, 1e-300)) : (v) => v;
  const x0 = Math.min(...xs), x1 = Math.max(...xs);
  const yv = ys.map(fy);
  const y0 = Math.min(...yv), y1 = Math.max(...yv);
  return {
    x: (x) => 40 + ((x - x0) / (x1 - x0 || 1)) * (w - 50),
    y: (y) => h - 30 - ((fy(y) - y0) / (y1 - y0 || 1)) * (h - 40),
    x0, x1, y0, y1,
  };
}

function line(ctx, pts, s, color, dash = []) {
  ctx.strokeStyle = color;
  ctx.setLineDash(dash);
  ctx.beginPath();
  pts.forEach(([x, y], i) => (i ? ctx.lineTo(s.x(x), s.y(y)) : ctx.moveTo(s.x(x), s.y(y))));
  ctx.stroke();
  ctx.setLineDash([]);
}

function drawMap() {
  const data = call(stability_map, "map-out", num("map-k"), num("map-n"));
  if (!data) return;
  const c = $("map"), ctx = c.getContext("2d");
  ctx.clearRect(0, 0, c.width, c.height);
  const rows = data.rows.length, cols = data.n_max;
  const cw = c.width / cols, ch = c.height / rows;
  const colors = { x: "#ddd", u: "#d55", m: "#5a5" };
  data.rows.forEach((row, i) => {
    [...row.cells].forEach((cell, j) => {
      ctx.fillStyle = colors[cell];
      ctx.fillRect(j * cw, i * ch, Math.ceil(cw), Math.ceil(ch));
    });
  });
  const tail = data.rows.slice(-5).map((r) => `n*(${r.k}) = ${r.n_star}`).join("   ");
  $("map-out").textContent = `rows k = 1..${rows}; last rows: ${tail}`;
}

function drawCurve() {
  const data = call(hardy_curve, "curve-out", num("curve-k"), num("curve-n"), num("curve-w"), 401);
  if (!data) return;
  const c = $("curve"), ctx = c.getContext("2d");
  axes(ctx, c.width, c.height);
  const real = data.real_axis.map(([b, v]) => [b - data.beta_star, Math.abs(v)]);
  const crit = data.critical_line;
  const ys = real.concat(crit).map((p) => p[1]).concat([data.alpha]);
  const s = scaler(c.width, c.height, real.map((p) => p[0]), ys, true);
  line(ctx, real, s, "#36c");
  line(ctx, crit, s, "#e80");
  line(ctx, [[s.x0, data.alpha], [s.x1, data.alpha]], s, "#444", [4, 4]);
  $("curve-out").textContent =
    `beta* = ${data.beta_star}   alpha = ${data.alpha_exact}   P = ${data.p_k}   (log scale; x is offset from beta*)`;
}

function drawCutoff() {
  const data = call(cutoff_profile, "cut-out", num("cut-k"), num("cut-n"), num("cut-eps"), num("cut-w"), num("cut-m"), 4096);
  if (!data) return;
  const c = $("cut"), ctx = c.getContext("2d");
  axes(ctx, c.width, c.height);
  const s = scaler(c.width, c.height, data.profile.map((p) => p[0]), [0, 1], false);
  line(ctx, data.profile, s, "#36c");
  $("cut-out").textContent =
    `quotient = ${data.quotient.toPrecision(8)}   alpha = ${data.alpha}   excess = ${(100 * data.relative_excess).toFixed(3)}%`;
}

await init();
$("map-go").onclick = drawMap;
$("curve-go").onclick = drawCurve;
$("cut-go").onclick = drawCutoff;
drawMap();
drawCurve();
drawCutoff();
