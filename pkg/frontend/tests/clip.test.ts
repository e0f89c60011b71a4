import { describe, expect, it } from "vitest";

import { clipLineToCube } from "../src/clip";
import type { Vec3 } from "../src/types";

describe("clipLineToCube", () => {
  it("clips the x-axis to the cube faces", () => {
    const segment = clipLineToCube([0, 0, 0], [1, 0, 0], 6);
    expect(segment).not.toBeNull();
    const [a, b] = segment!;
    expect(a).toEqual([-6, 0, 0]);
    expect(b).toEqual([6, 0, 0]);
  });

  it("handles lines not through the origin", () => {
    const segment = clipLineToCube([0, 2, 3], [1, 0, 0], 6)!;
    expect(segment[0]).toEqual([-6, 2, 3]);
    expect(segment[1]).toEqual([6, 2, 3]);
  });

  it("clips diagonal lines symmetrically", () => {
    const d = 1 / Math.sqrt(3);
    const [a, b] = clipLineToCube([0, 0, 0], [d, d, d], 6)!;
    for (let axis = 0; axis < 3; axis++) {
      expect(a[axis]).toBeCloseTo(-6, 10);
      expect(b[axis]).toBeCloseTo(6, 10);
    }
  });

  it("returns null for lines missing the cube", () => {
    expect(clipLineToCube([0, 10, 0], [1, 0, 0], 6)).toBeNull();
    expect(clipLineToCube([7, 7, 7], [0, 0, 1], 6)).toBeNull();
  });

  it("orders endpoints along the direction", () => {
    const [a, b] = clipLineToCube([1, 0, 0], [-1, 0, 0], 6)!;
    // entry point first when walking along the (negative-x) direction
    expect(a[0]).toBe(6);
    expect(b[0]).toBe(-6);
  });

  it("respects a custom half-width", () => {
    const [a, b] = clipLineToCube([0, 0, 0], [0, 1, 0], 2.5)!;
    expect(a[1]).toBe(-2.5);
    expect(b[1]).toBe(2.5);
  });
});
