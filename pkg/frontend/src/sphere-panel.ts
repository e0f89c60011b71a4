// Left panel: a rendered S^2 with pickable, draggable base-point markers.

import * as THREE from "three";

import type { Selection } from "./state";
import type { Vec3 } from "./types";

export interface SpherePanelCallbacks {
  onPick(point: Vec3): void;
  onDragMove(id: string, point: Vec3): void;
  onMarkerClick(id: string): void;
}

const DRAG_THRESHOLD_PX = 4;

export class SpherePanel {
  private renderer: THREE.WebGLRenderer;
  private scene = new THREE.Scene();
  private camera: THREE.PerspectiveCamera;
  private raycaster = new THREE.Raycaster();
  private sphere: THREE.Mesh;
  private markers = new Map<string, THREE.Mesh>();
  private markerGroup = new THREE.Group();

  private pointerDown: { x: number; y: number } | null = null;
  private draggingId: string | null = null;
  private orbiting = false;
  private azimuth = 0.6;
  private polar = 1.2;

  constructor(
    private container: HTMLElement,
    private callbacks: SpherePanelCallbacks,
  ) {
    this.renderer = new THREE.WebGLRenderer({ antialias: true });
    this.renderer.setPixelRatio(window.devicePixelRatio);
    container.appendChild(this.renderer.domElement);

    this.camera = new THREE.PerspectiveCamera(45, 1, 0.1, 100);
    this.updateCamera();

    this.scene.background = new THREE.Color(0x10131a);
    const ambient = new THREE.AmbientLight(0xffffff, 0.6);
    const key = new THREE.DirectionalLight(0xffffff, 1.4);
    key.position.set(3, 4, 5);
    this.scene.add(ambient, key);

    this.sphere = new THREE.Mesh(
      new THREE.SphereGeometry(1, 48, 32),
      new THREE.MeshStandardMaterial({
        color: 0x2b3a55,
        roughness: 0.75,
        transparent: true,
        opacity: 0.92,
      }),
    );
    this.scene.add(this.sphere);
    this.scene.add(new THREE.AxesHelper(1.4));
    this.scene.add(this.markerGroup);

    const canvas = this.renderer.domElement;
    canvas.addEventListener("pointerdown", (e) => this.handleDown(e));
    canvas.addEventListener("pointermove", (e) => this.handleMove(e));
    canvas.addEventListener("pointerup", (e) => this.handleUp(e));
    canvas.addEventListener("pointerleave", () => this.endGesture());
    new ResizeObserver(() => this.resize()).observe(container);
    this.resize();
    this.animate();
  }

  syncMarkers(selections: Selection[]): void {
    const seen = new Set<string>();
    for (const selection of selections) {
      seen.add(selection.id);
      let marker = this.markers.get(selection.id);
      if (!marker) {
        marker = new THREE.Mesh(
          new THREE.SphereGeometry(0.045, 16, 12),
          new THREE.MeshBasicMaterial({ color: selection.color }),
        );
        marker.userData.selectionId = selection.id;
        this.markers.set(selection.id, marker);
        this.markerGroup.add(marker);
      }
      (marker.material as THREE.MeshBasicMaterial).color.set(selection.color);
      marker.position.set(...selection.basePoint);
    }
    for (const [id, marker] of this.markers) {
      if (!seen.has(id)) {
        this.markerGroup.remove(marker);
        this.markers.delete(id);
      }
    }
  }

  private updateCamera(): void {
    const r = 3.2;
    this.camera.position.set(
      r * Math.sin(this.polar) * Math.cos(this.azimuth),
      r * Math.sin(this.polar) * Math.sin(this.azimuth),
      r * Math.cos(this.polar),
    );
    this.camera.up.set(0, 0, 1);
    this.camera.lookAt(0, 0, 0);
  }

  private pointerRay(event: PointerEvent): THREE.Raycaster {
    const rect = this.renderer.domElement.getBoundingClientRect();
    const ndc = new THREE.Vector2(
      ((event.clientX - rect.left) / rect.width) * 2 - 1,
      -((event.clientY - rect.top) / rect.height) * 2 + 1,
    );
    this.raycaster.setFromCamera(ndc, this.camera);
    return this.raycaster;
  }

  private spherePointAt(event: PointerEvent): Vec3 | null {
    const hits = this.pointerRay(event).intersectObject(this.sphere, false);
    const hit = hits[0];
    if (!hit) return null;
    const p = hit.point.clone().normalize();
    return [p.x, p.y, p.z];
  }

  private handleDown(event: PointerEvent): void {
    this.pointerDown = { x: event.clientX, y: event.clientY };
    const markerHits = this.pointerRay(event).intersectObjects(
      [...this.markers.values()],
      false,
    );
    const first = markerHits[0];
    if (first) {
      this.draggingId = first.object.userData.selectionId as string;
      this.renderer.domElement.setPointerCapture(event.pointerId);
      return;
    }
    this.orbiting = this.spherePointAt(event) === null;
  }

  private handleMove(event: PointerEvent): void {
    if (this.draggingId) {
      const point = this.spherePointAt(event);
      if (point) this.callbacks.onDragMove(this.draggingId, point);
      return;
    }
    if (this.orbiting && this.pointerDown) {
      this.azimuth -= (event.movementX ?? 0) * 0.008;
      this.polar = Math.min(
        Math.PI - 0.15,
        Math.max(0.15, this.polar - (event.movementY ?? 0) * 0.008),
      );
      this.updateCamera();
    }
  }

  private handleUp(event: PointerEvent): void {
    const start = this.pointerDown;
    const wasDragging = this.draggingId;
    const moved =
      start !== null &&
      Math.hypot(event.clientX - start.x, event.clientY - start.y) >
        DRAG_THRESHOLD_PX;
    this.endGesture();
    if (wasDragging) {
      if (!moved) this.callbacks.onMarkerClick(wasDragging);
      return;
    }
    if (!moved) {
      const point = this.spherePointAt(event);
      if (point) this.callbacks.onPick(point);
    }
  }

  private endGesture(): void {
    this.pointerDown = null;
    this.draggingId = null;
    this.orbiting = false;
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
