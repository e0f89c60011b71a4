// Stable display hues: golden-angle steps around the color wheel.

const GOLDEN_ANGLE = 137.50776405003785;

export function colorForIndex(index: number): string {
  const hue = (index * GOLDEN_ANGLE) % 360;
  return `hsl(${hue.toFixed(1)}, 85%, 60%)`;
}
