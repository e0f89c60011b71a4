// Wiring: selections drive debounced, cancellable fetches against the
// service; panels re-render from state after every response.

import { AbortRegistry, ApiClient, ApiRequestError } from "./api";
import { KeyedDebouncer } from "./debounce";
import { FiberPanel } from "./fiber-panel";
import { SpherePanel } from "./sphere-panel";
import { ExplorerState } from "./state";
import type { Selection } from "./state";
import type { Vec3 } from "./types";

const SAMPLES = 256;
const VIEW_HALF_WIDTH = 6;
const RING_COUNT = 12;
const RING_RADIUS = 0.35;

const api = new ApiClient("");
const state = new ExplorerState();
const debouncer = new KeyedDebouncer<string>(80);
const aborts = new AbortRegistry<string>();

const sphereContainer = document.getElementById("sphere-panel")!;
const fiberContainer = document.getElementById("fiber-panel")!;
const modeSelect = document.getElementById("mode") as HTMLSelectElement;
const selectionList = document.getElementById("selection-list")!;
const linkA = document.getElementById("link-a") as HTMLSelectElement;
const linkB = document.getElementById("link-b") as HTMLSelectElement;
const linkButton = document.getElementById("link-check") as HTMLButtonElement;
const linkBadge = document.getElementById("link-badge")!;
const toastBox = document.getElementById("toasts")!;

function toast(message: string): void {
  const node = document.createElement("div");
  node.className = "toast";
  node.textContent = message;
  toastBox.appendChild(node);
  setTimeout(() => node.remove(), 5000);
}

function describe(selection: Selection): string {
  const p = selection.basePoint.map((x) => x.toFixed(2)).join(", ");
  const kind = selection.kind.type === "single" ? "point" : "ring";
  return `${kind} (${p})`;
}

function renderPanels(): void {
  fiberPanel.setGeometries(state.sceneGeometries(VIEW_HALF_WIDTH));
  spherePanel.syncMarkers(state.listSelections());
  renderSelectionList();
}

function renderSelectionList(): void {
  selectionList.replaceChildren();
  for (const sel of [linkA, linkB]) {
    const keep = sel.value;
    sel.replaceChildren();
    for (const selection of state.listSelections()) {
      const option = document.createElement("option");
      option.value = selection.id;
      option.textContent = describe(selection);
      sel.appendChild(option);
    }
    if ([...sel.options].some((o) => o.value === keep)) sel.value = keep;
  }
  for (const selection of state.listSelections()) {
    const row = document.createElement("div");
    row.className = "selection-row";
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = selection.color;
    const label = document.createElement("span");
    label.textContent = describe(selection);
    const remove = document.createElement("button");
    remove.textContent = "remove";
    remove.addEventListener("click", () => {
      debouncer.cancel(selection.id);
      aborts.abort(selection.id);
      state.removeSelection(selection.id);
      renderPanels();
    });
    row.append(swatch, label, remove);
    selectionList.appendChild(row);
  }
  updateLinkControls();
}

function updateLinkControls(): void {
  const distinct =
    linkA.value !== "" && linkB.value !== "" && linkA.value !== linkB.value;
  linkButton.disabled = !distinct;
}

async function refetch(selection: Selection): Promise<void> {
  const signal = aborts.begin(selection.id);
  try {
    const points = state.basePointsFor(selection.id);
    const docs =
      points.length === 1
        ? [await api.fetchFiber(points[0]!, SAMPLES, { signal })]
        : await api.fetchFibers(points, SAMPLES, { signal });
    state.setDocuments(selection.id, docs);
    renderPanels();
  } catch (error) {
    if (error instanceof DOMException && error.name === "AbortError") return;
    if (error instanceof ApiRequestError) {
      toast(error.message); // selection is retained
    } else {
      toast(`service unreachable: ${String(error)}`);
    }
  } finally {
    aborts.finish(selection.id, signal);
  }
}

function addSelectionAt(point: Vec3): void {
  const kind =
    modeSelect.value === "ring"
      ? ({ type: "circle-generator", angularRadius: RING_RADIUS, count: RING_COUNT } as const)
      : ({ type: "single" } as const);
  const selection = state.addSelection(point, kind);
  renderPanels();
  void refetch(selection);
}

const fiberPanel = new FiberPanel(fiberContainer);
const spherePanel = new SpherePanel(sphereContainer, {
  onPick: addSelectionAt,
  onDragMove: (id, point) => {
    const moved = state.moveSelection(id, point);
    if (!moved) return;
    spherePanel.syncMarkers(state.listSelections());
    debouncer.schedule(id, () => {
      const current = state.getSelection(id);
      if (current) void refetch(current);
    });
  },
  onMarkerClick: (id) => {
    if (linkA.value === id || linkA.value === "") linkA.value = id;
    else linkB.value = id;
    updateLinkControls();
  },
});

linkA.addEventListener("change", updateLinkControls);
linkB.addEventListener("change", updateLinkControls);
linkButton.addEventListener("click", async () => {
  const a = state.getSelection(linkA.value);
  const b = state.getSelection(linkB.value);
  if (!a || !b) return;
  linkBadge.textContent = "checking...";
  linkBadge.className = "badge pending";
  try {
    const report = await api.fetchLink(a.basePoint, b.basePoint, SAMPLES);
    const lineFiber = [a, b].some(
      (s) => Math.hypot(s.basePoint[0] - 1, s.basePoint[1], s.basePoint[2]) <= 1e-6,
    );
    const gauss = report.gauss_direct >= 0 ? "+1" : "-1";
    linkBadge.textContent = !report.linked
      ? "not linked"
      : lineFiber
        ? "line through circle"
        : `linked (${gauss})`;
    linkBadge.className = report.linked ? "badge linked" : "badge unlinked";
  } catch (error) {
    linkBadge.textContent =
      error instanceof ApiRequestError ? error.message : "service error";
    linkBadge.className = "badge error";
  }
});

void api
  .health()
  .then((h) => {
    document.getElementById("version")!.textContent = `service ${h.version}`;
  })
  .catch(() => toast("service not reachable; start it with: hopf-atlas serve"));

renderPanels();
