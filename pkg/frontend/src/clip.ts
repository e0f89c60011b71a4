// Clip an infinite line to an axis-aligned cube (slab method).

import type { Vec3 } from "./types";

/**
 * Segment of the line point + t * direction inside |x|,|y|,|z| <= halfWidth,
 * or null when the line misses the cube entirely.
 */
export function clipLineToCube(
  point: Vec3,
  direction: Vec3,
  halfWidth: number,
): [Vec3, Vec3] | null {
  let tMin = -Infinity;
  let tMax = Infinity;
  for (let axis = 0; axis < 3; axis++) {
    const p = point[axis]!;
    const d = direction[axis]!;
    if (Math.abs(d) < 1e-15) {
      if (Math.abs(p) > halfWidth) return null;
      continue;
    }
    let lo = (-halfWidth - p) / d;
    let hi = (halfWidth - p) / d;
    if (lo > hi) [lo, hi] = [hi, lo];
    tMin = Math.max(tMin, lo);
    tMax = Math.min(tMax, hi);
    if (tMin > tMax) return null;
  }
  if (!Number.isFinite(tMin) || !Number.isFinite(tMax)) return null;
  const at = (t: number): Vec3 => [
    point[0] + t * direction[0],
    point[1] + t * direction[1],
    point[2] + t * direction[2],
  ];
  return [at(tMin), at(tMax)];
}
