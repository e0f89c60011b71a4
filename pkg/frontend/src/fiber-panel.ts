// Right panel: projected fibers rendered verbatim from service vertices.

import * as THREE from "three";

import type { FiberGeometry } from "./state";

export class FiberPanel {
  private renderer: THREE.WebGLRenderer;
  private scene = new THREE.Scene();
  private camera: THREE.PerspectiveCamera;
  private fiberGroup = new THREE.Group();
  private azimuth = 0.9;
  private polar = 1.1;
  private distance = 9;
  private orbiting = false;

  constructor(private container: HTMLElement) {
    this.renderer = new THREE.WebGLRenderer({ antialias: true });
    this.renderer.setPixelRatio(window.devicePixelRatio);
    container.appendChild(this.renderer.domElement);
    this.camera = new THREE.PerspectiveCamera(45, 1, 0.1, 500);
    this.updateCamera();

    this.scene.background = new THREE.Color(0x0b0d12);
    this.scene.add(new THREE.AxesHelper(2));

    // static backdrop: the reference unit circle in the y,z-plane
    const t = new Float32Array(3 * 129);
    for (let i = 0; i <= 128; i++) {
      const a = (2 * Math.PI * i) / 128;
      t[3 * i] = 0;
      t[3 * i + 1] = Math.sin(a);
      t[3 * i + 2] = Math.cos(a);
    }
    const refGeom = new THREE.BufferGeometry();
    refGeom.setAttribute("position", new THREE.BufferAttribute(t, 3));
    this.scene.add(
      new THREE.Line(refGeom, new THREE.LineBasicMaterial({ color: 0x666666 })),
    );
    this.scene.add(this.fiberGroup);

    const canvas = this.renderer.domElement;
    canvas.addEventListener("pointerdown", () => (this.orbiting = true));
    canvas.addEventListener("pointerup", () => (this.orbiting = false));
    canvas.addEventListener("pointerleave", () => (this.orbiting = false));
    canvas.addEventListener("pointermove", (e) => {
      if (!this.orbiting) return;
      this.azimuth -= (e.movementX ?? 0) * 0.008;
      this.polar = Math.min(
        Math.PI - 0.15,
        Math.max(0.15, this.polar - (e.movementY ?? 0) * 0.008),
      );
      this.updateCamera();
    });
    canvas.addEventListener("wheel", (e) => {
      e.preventDefault();
      this.distance = Math.min(60, Math.max(2, this.distance * (1 + e.deltaY * 0.001)));
      this.updateCamera();
    });
    new ResizeObserver(() => this.resize()).observe(container);
    this.resize();
    this.animate();
  }

  /** Replace the rendered fibers; geometry is a pure function of the input. */
  setGeometries(geometries: FiberGeometry[]): void {
    this.fiberGroup.clear();
    for (const item of geometries) {
      const flat = new Float32Array(item.vertices.length * 3);
      item.vertices.forEach((v, i) => flat.set(v, 3 * i));
      const geom = new THREE.BufferGeometry();
      geom.setAttribute("position", new THREE.BufferAttribute(flat, 3));
      const material = new THREE.LineBasicMaterial({ color: item.color });
      const line =
        item.kind === "circle-polyline"
          ? new THREE.LineLoop(geom, material)
          : new THREE.Line(geom, material);
      this.fiberGroup.add(line);
    }
  }

  private updateCamera(): void {
    this.camera.position.set(
      this.distance * Math.sin(this.polar) * Math.cos(this.azimuth),
      this.distance * Math.sin(this.polar) * Math.sin(this.azimuth),
      this.distance * Math.cos(this.polar),
    );
    this.camera.up.set(0, 0, 1);
    this.camera.lookAt(0, 0, 0);
  }

  private resize(): void {
    const w = this.container.clientWidth || 400;
    const h = this.container.clientHeight || 400;
    this.renderer.setSize(w, h, false);
    this.camera.aspect = w / h;
    this.camera.updateProjectionMatrix();
  }

  private animate = (): void => {
    requestAnimationFrame(this.animate);
    this.renderer.render(this.scene, this.camera);
  };
}
