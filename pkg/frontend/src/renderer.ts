/**
 * WebGL plot renderer: point cloud (sized, per-vertex color), wireframe
 * lines for gridded data, and a filled quad for the focused surface cell.
 * All highlight styling flows through highlight.styleFor so the visual
 * contract lives in one place.
 */

import { DatasetView } from "./dataset.js";
import { CELL_FILL_COLOR, HighlightSpec, pointId, styleFor } from "./highlight.js";
import { ViewState } from "./view.js";

const POINT_VS = `
attribute vec3 aPosition;
attribute vec3 aColor;
attribute float aSize;
uniform mat4 uMvp;
varying vec3 vColor;
void main() {
  gl_Position = uMvp * vec4(aPosition, 1.0);
  gl_PointSize = aSize;
  vColor = aColor;
}
`;

const POINT_FS = `
precision mediump float;
varying vec3 vColor;
void main() {
  vec2 d = gl_PointCoord - vec2(0.5);
  if (dot(d, d) > 0.25) discard;
  gl_FragColor = vec4(vColor, 1.0);
}
`;

const FLAT_VS = `
attribute vec3 aPosition;
uniform mat4 uMvp;
void main() { gl_Position = uMvp * vec4(aPosition, 1.0); }
`;

const FLAT_FS = `
precision mediump float;
uniform vec4 uColor;
void main() { gl_FragColor = uColor; }
`;

const BASE_POINT_SIZE = 6.0;
const WIRE_COLOR: [number, number, number, number] = [0.5, 0.6, 0.7, 1.0];

export function hexToRgb(hex: string): [number, number, number] {
  const v = parseInt(hex.replace("#", ""), 16);
  return [((v >> 16) & 0xff) / 255, ((v >> 8) & 0xff) / 255, (v & 0xff) / 255];
}

function compile(gl: WebGLRenderingContext, kind: number, source: string): WebGLShader {
  const shader = gl.createShader(kind)!;
  gl.shaderSource(shader, source);
  gl.compileShader(shader);
  if (!gl.getShaderParameter(shader, gl.COMPILE_STATUS)) {
    throw new Error(`shader compile failed: ${gl.getShaderInfoLog(shader)}`);
  }
  return shader;
}

function link(gl: WebGLRenderingContext, vs: string, fs: string): WebGLProgram {
  const program = gl.createProgram()!;
  gl.attachShader(program, compile(gl, gl.VERTEX_SHADER, vs));
  gl.attachShader(program, compile(gl, gl.FRAGMENT_SHADER, fs));
  gl.linkProgram(program);
  if (!gl.getProgramParameter(program, gl.LINK_STATUS)) {
    throw new Error(`program link failed: ${gl.getProgramInfoLog(program)}`);
  }
  return program;
}

/** Column-major orbit camera MVP over the unit-normalized data cube. */
export function mvpMatrix(view: ViewState, aspect: number): Float32Array {
  const ca = Math.cos(view.azimuthRad);
  const sa = Math.sin(view.azimuthRad);
  const ce = Math.cos(view.elevationRad);
  const se = Math.sin(view.elevationRad);
  const s = 0.9 * view.zoom;
  const sx = s / Math.max(aspect, 1e-6);
  // Rotate azimuth about the vertical axis, then tilt, then scale into clip
  // space with a mild depth term for point ordering.
  return new Float32Array([
    sx * ca, s * sa * se, -0.1 * sa * ce, 0,
    0, s * ce, 0.1 * se, 0,
    sx * sa, -s * ca * se, 0.1 * ca * ce, 0,
    0, 0, 0.5, 1,
  ]);
}

export class PlotRenderer {
  private pointProgram: WebGLProgram;
  private flatProgram: WebGLProgram;
  private positionBuffer: WebGLBuffer;
  private colorBuffer: WebGLBuffer;
  private sizeBuffer: WebGLBuffer;
  private wireBuffer: WebGLBuffer;
  private cellBuffer: WebGLBuffer;
  private pointCount = 0;
  private wireVertexCount = 0;
  private cellVertexCount = 0;
  private dataset: DatasetView | null = null;
  private normalized: Float32Array = new Float32Array(0);

  constructor(private readonly gl: WebGLRenderingContext) {
    this.pointProgram = link(gl, POINT_VS, POINT_FS);
    this.flatProgram = link(gl, FLAT_VS, FLAT_FS);
    this.positionBuffer = gl.createBuffer()!;
    this.colorBuffer = gl.createBuffer()!;
    this.sizeBuffer = gl.createBuffer()!;
    this.wireBuffer = gl.createBuffer()!;
    this.cellBuffer = gl.createBuffer()!;
    gl.enable(gl.DEPTH_TEST);
  }

  setData(dataset: DatasetView): void {
    this.dataset = dataset;
    const { points } = dataset;
    this.pointCount = points.length;
    this.normalized = new Float32Array(points.length * 3);
    const span = dataset.axes.map((a) => (a.max > a.min ? a.max - a.min : 1));
    points.forEach((p, k) => {
      for (let c = 0; c < 3; c++) {
        this.normalized[k * 3 + c] = ((p[c] - dataset.axes[c].min) / span[c]) * 2 - 1;
      }
    });
    const gl = this.gl;
    gl.bindBuffer(gl.ARRAY_BUFFER, this.positionBuffer);
    gl.bufferData(gl.ARRAY_BUFFER, this.normalized, gl.STATIC_DRAW);
    this.uploadWireframe();
  }

  private normalizedAt(index: number): [number, number, number] {
    return [
      this.normalized[index * 3],
      this.normalized[index * 3 + 1],
      this.normalized[index * 3 + 2],
    ];
  }

  private uploadWireframe(): void {
    const gl = this.gl;
    const grid = this.dataset?.grid;
    if (!grid) {
      this.wireVertexCount = 0;
      return;
    }
    const lookup = new Map<string, number>();
    this.dataset!.points.forEach((p, k) => lookup.set(`${p[0]}|${p[2]}`, k));
    const segments: number[] = [];
    const push = (x1: number, z1: number, x2: number, z2: number) => {
      const a = this.normalizedAt(lookup.get(`${x1}|${z1}`)!);
      const b = this.normalizedAt(lookup.get(`${x2}|${z2}`)!);
      segments.push(...a, ...b);
    };
    for (let i = 0; i < grid.xs.length; i++) {
      for (let j = 0; j + 1 < grid.zs.length; j++) {
        push(grid.xs[i], grid.zs[j], grid.xs[i], grid.zs[j + 1]);
      }
    }
    for (let j = 0; j < grid.zs.length; j++) {
      for (let i = 0; i + 1 < grid.xs.length; i++) {
        push(grid.xs[i], grid.zs[j], grid.xs[i + 1], grid.zs[j]);
      }
    }
    this.wireVertexCount = segments.length / 3;
    gl.bindBuffer(gl.ARRAY_BUFFER, this.wireBuffer);
    gl.bufferData(gl.ARRAY_BUFFER, new Float32Array(segments), gl.STATIC_DRAW);
  }

  /** Recompute per-vertex colors/sizes (point mode) or the focus quad. */
  applyHighlight(spec: HighlightSpec, mode: "point" | "surface"): void {
    if (!this.dataset) return;
    const gl = this.gl;
    if (mode === "point") {
      const colors = new Float32Array(this.pointCount * 3);
      const sizes = new Float32Array(this.pointCount);
      for (let k = 0; k < this.pointCount; k++) {
        const style = styleFor(spec, pointId(k), "point");
        const [r, g, b] = hexToRgb(style.color);
        colors.set([r * style.brightness, g * style.brightness, b * style.brightness], k * 3);
        sizes[k] = BASE_POINT_SIZE * style.sizeScale;
      }
      gl.bindBuffer(gl.ARRAY_BUFFER, this.colorBuffer);
      gl.bufferData(gl.ARRAY_BUFFER, colors, gl.STATIC_DRAW);
      gl.bindBuffer(gl.ARRAY_BUFFER, this.sizeBuffer);
      gl.bufferData(gl.ARRAY_BUFFER, sizes, gl.STATIC_DRAW);
      this.cellVertexCount = 0;
      return;
    }
    const grid = this.dataset.grid;
    if (!grid) return;
    const [i, j] = spec.focused
      .replace("c:", "")
      .split(",")
      .map((v) => parseInt(v, 10));
    const lookup = new Map<string, number>();
    this.dataset.points.forEach((p, k) => lookup.set(`${p[0]}|${p[2]}`, k));
    const corner = (di: number, dj: number) =>
      this.normalizedAt(lookup.get(`${grid.xs[i + di]}|${grid.zs[j + dj]}`)!);
    const [a, b, c, d] = [corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1)];
    const quad = new Float32Array([...a, ...b, ...c, ...a, ...c, ...d]);
    this.cellVertexCount = 6;
    gl.bindBuffer(gl.ARRAY_BUFFER, this.cellBuffer);
    gl.bufferData(gl.ARRAY_BUFFER, quad, gl.STATIC_DRAW);
  }

  draw(view: ViewState, width: number, height: number): void {
    const gl = this.gl;
    gl.viewport(0, 0, width, height);
    const bg = view.darkMode ? 0.06 : 0.97;
    gl.clearColor(bg, bg, bg + 0.01, 1);
    gl.clear(gl.COLOR_BUFFER_BIT | gl.DEPTH_BUFFER_BIT);
    const mvp = mvpMatrix(view, width / Math.max(height, 1));

    if (this.wireVertexCount > 0) {
      this.drawFlat(this.wireBuffer, this.wireVertexCount, gl.LINES, WIRE_COLOR, mvp);
    }
    if (this.cellVertexCount > 0) {
      const [r, g, b] = hexToRgb(CELL_FILL_COLOR);
      this.drawFlat(this.cellBuffer, this.cellVertexCount, gl.TRIANGLES, [r, g, b, 1], mvp);
    }
    if (this.pointCount > 0) this.drawPoints(mvp);
  }

  private drawPoints(mvp: Float32Array): void {
    const gl = this.gl;
    gl.useProgram(this.pointProgram);
    gl.uniformMatrix4fv(gl.getUniformLocation(this.pointProgram, "uMvp"), false, mvp);
    const bind = (buffer: WebGLBuffer, name: string, size: number) => {
      const loc = gl.getAttribLocation(this.pointProgram, name);
      gl.bindBuffer(gl.ARRAY_BUFFER, buffer);
      gl.enableVertexAttribArray(loc);
      gl.vertexAttribPointer(loc, size, gl.FLOAT, false, 0, 0);
    };
    bind(this.positionBuffer, "aPosition", 3);
    bind(this.colorBuffer, "aColor", 3);
    bind(this.sizeBuffer, "aSize", 1);
    gl.drawArrays(gl.POINTS, 0, this.pointCount);
  }

  private drawFlat(
    buffer: WebGLBuffer,
    count: number,
    primitive: number,
    color: [number, number, number, number],
    mvp: Float32Array,
  ): void {
    const gl = this.gl;
    gl.useProgram(this.flatProgram);
    gl.uniformMatrix4fv(gl.getUniformLocation(this.flatProgram, "uMvp"), false, mvp);
    gl.uniform4fv(gl.getUniformLocation(this.flatProgram, "uColor"), color);
    const loc = gl.getAttribLocation(this.flatProgram, "aPosition");
    gl.bindBuffer(gl.ARRAY_BUFFER, buffer);
    gl.enableVertexAttribArray(loc);
    gl.vertexAttribPointer(loc, 3, gl.FLOAT, false, 0, 0);
    gl.drawArrays(primitive, 0, count);
  }
}

/** Structural subset of HTMLCanvasElement for snapshot export. */
export interface SnapshotCanvas {
  toDataURL(type?: string): string;
}

/** Current canvas contents as PNG bytes. */
export function exportImage(canvas: SnapshotCanvas): Uint8Array {
  const url = canvas.toDataURL("image/png");
  const prefix = "data:image/png;base64,";
  if (!url.startsWith(prefix)) {
    throw new Error("rendering context lost: no PNG snapshot available");
  }
  const raw = atob(url.slice(prefix.length));
  const bytes = new Uint8Array(raw.length);
  for (let k = 0; k < raw.length; k++) bytes[k] = raw.charCodeAt(k);
  return bytes;
}
