// Explorer state: selections on the sphere and the fiber documents fetched
// for them.  The right panel's geometry is a pure function of this state,
// and the vertices are exactly the service's arrays (no recomputation).

import { clipLineToCube } from "./clip";
import { colorForIndex } from "./colors";
import type { FiberDocument, Vec3 } from "./types";

export type SelectionKind =
  | { type: "single" }
  | { type: "circle-generator"; angularRadius: number; count: number };

export interface Selection {
  id: string;
  basePoint: Vec3;
  color: string;
  kind: SelectionKind;
}

export interface FiberGeometry {
  selectionId: string;
  color: string;
  /** closed polyline of service vertices, or a two-point clipped line */
  kind: "circle-polyline" | "clipped-line";
  vertices: Vec3[];
}

export function normalize(v: Vec3): Vec3 {
  const n = Math.hypot(v[0], v[1], v[2]);
  return [v[0] / n, v[1] / n, v[2] / n];
}

/**
 * Base points for a ring generator: `count` points on the S^2 circle of the
 * given angular radius around the center direction.
 */
export function circleGeneratorPoints(
  center: Vec3,
  angularRadius: number,
  count: number,
): Vec3[] {
  const c = normalize(center);
  const axis = Math.abs(c[0]) <= Math.abs(c[1]) && Math.abs(c[0]) <= Math.abs(c[2])
    ? [1, 0, 0]
    : Math.abs(c[1]) <= Math.abs(c[2])
      ? [0, 1, 0]
      : [0, 0, 1];
  const dot = axis[0]! * c[0] + axis[1]! * c[1] + axis[2]! * c[2];
  const e1 = normalize([
    axis[0]! - dot * c[0],
    axis[1]! - dot * c[1],
    axis[2]! - dot * c[2],
  ]);
  const e2: Vec3 = [
    c[1] * e1[2] - c[2] * e1[1],
    c[2] * e1[0] - c[0] * e1[2],
    c[0] * e1[1] - c[1] * e1[0],
  ];
  const cosA = Math.cos(angularRadius);
  const sinA = Math.sin(angularRadius);
  const points: Vec3[] = [];
  for (let k = 0; k < count; k++) {
    const theta = (2 * Math.PI * k) / count;
    const ct = Math.cos(theta);
    const st = Math.sin(theta);
    points.push(
      normalize([
        cosA * c[0] + sinA * (ct * e1[0] + st * e2[0]),
        cosA * c[1] + sinA * (ct * e1[1] + st * e2[1]),
        cosA * c[2] + sinA * (ct * e1[2] + st * e2[2]),
      ]),
    );
  }
  return points;
}

export function fiberGeometry(
  doc: FiberDocument,
  selectionId: string,
  color: string,
  viewHalfWidth: number,
): FiberGeometry | null {
  if (doc.projected !== null) {
    return { selectionId, color, kind: "circle-polyline", vertices: doc.projected };
  }
  if (doc.fit.kind !== "line") return null;
  const segment = clipLineToCube(doc.fit.point, doc.fit.direction, viewHalfWidth);
  if (segment === null) return null;
  return { selectionId, color, kind: "clipped-line", vertices: segment };
}

export class ExplorerState {
  private selections = new Map<string, Selection>();
  private documents = new Map<string, FiberDocument[]>();
  private nextColor = 0;
  private nextId = 1;

  addSelection(basePoint: Vec3, kind: SelectionKind): Selection {
    const selection: Selection = {
      id: `sel-${this.nextId++}`,
      basePoint: normalize(basePoint),
      color: colorForIndex(this.nextColor++),
      kind,
    };
    this.selections.set(selection.id, selection);
    return selection;
  }

  removeSelection(id: string): void {
    this.selections.delete(id);
    this.documents.delete(id);
  }

  moveSelection(id: string, basePoint: Vec3): Selection | undefined {
    const existing = this.selections.get(id);
    if (!existing) return undefined;
    const moved = { ...existing, basePoint: normalize(basePoint) };
    this.selections.set(id, moved);
    return moved;
  }

  setDocuments(id: string, docs: FiberDocument[]): void {
    if (this.selections.has(id)) {
      this.documents.set(id, docs);
    }
  }

  getSelection(id: string): Selection | undefined {
    return this.selections.get(id);
  }

  listSelections(): Selection[] {
    return [...this.selections.values()];
  }

  /** Base points a selection requests from the service. */
  basePointsFor(id: string): Vec3[] {
    const selection = this.selections.get(id);
    if (!selection) return [];
    if (selection.kind.type === "single") return [selection.basePoint];
    return circleGeneratorPoints(
      selection.basePoint,
      selection.kind.angularRadius,
      selection.kind.count,
    );
  }

  /** The right panel's contents: purely derived, vertices verbatim. */
  sceneGeometries(viewHalfWidth = 6): FiberGeometry[] {
    const out: FiberGeometry[] = [];
    for (const selection of this.selections.values()) {
      for (const doc of this.documents.get(selection.id) ?? []) {
        const geometry = fiberGeometry(
          doc,
          selection.id,
          selection.color,
          viewHalfWidth,
        );
        if (geometry) out.push(geometry);
      }
    }
    return out;
  }
}
