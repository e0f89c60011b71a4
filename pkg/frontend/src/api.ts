// Typed client for the fiber/link service, with per-key request cancellation.

import type {
  ApiErrorBody,
  FiberDocument,
  PairLinkReportDocument,
  Vec3,
} from "./types";

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(`${body.code}: ${body.message}`);
    this.name = "ApiRequestError";
  }
}

async function parseOrThrow<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let body: ApiErrorBody;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    body = { code: "parse", message: `unexpected response ${response.status}` };
  }
  throw new ApiRequestError(response.status, body);
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  fiberUrl(point: Vec3, samples: number, gauge = "auto"): string {
    const params = new URLSearchParams({
      p1: String(point[0]),
      p2: String(point[1]),
      p3: String(point[2]),
      samples: String(samples),
      gauge,
    });
    return `${this.baseUrl}/api/fiber?${params}`;
  }

  linkUrl(a: Vec3, b: Vec3, samples: number): string {
    const params = new URLSearchParams({
      pa1: String(a[0]),
      pa2: String(a[1]),
      pa3: String(a[2]),
      pb1: String(b[0]),
      pb2: String(b[1]),
      pb3: String(b[2]),
      samples: String(samples),
    });
    return `${this.baseUrl}/api/link?${params}`;
  }

  async health(): Promise<{ status: string; version: string }> {
    return parseOrThrow(await fetch(`${this.baseUrl}/api/health`));
  }

  async fetchFiber(
    point: Vec3,
    samples: number,
    options: { gauge?: string; signal?: AbortSignal } = {},
  ): Promise<FiberDocument> {
    const url = this.fiberUrl(point, samples, options.gauge ?? "auto");
    return parseOrThrow(await fetch(url, { signal: options.signal }));
  }

  async fetchFibers(
    points: Vec3[],
    samples: number,
    options: { signal?: AbortSignal } = {},
  ): Promise<FiberDocument[]> {
    const response = await fetch(`${this.baseUrl}/api/fibers`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ points, samples }),
      signal: options.signal,
    });
    const parsed = await parseOrThrow<{ fibers: FiberDocument[] }>(response);
    return parsed.fibers;
  }

  async fetchLink(
    a: Vec3,
    b: Vec3,
    samples: number,
    options: { signal?: AbortSignal } = {},
  ): Promise<PairLinkReportDocument> {
    return parseOrThrow(await fetch(this.linkUrl(a, b, samples), options));
  }
}

/** One in-flight request per key: starting a new one aborts its predecessor. */
export class AbortRegistry<K> {
  private inflight = new Map<K, AbortController>();

  begin(key: K): AbortSignal {
    this.inflight.get(key)?.abort();
    const controller = new AbortController();
    this.inflight.set(key, controller);
    return controller.signal;
  }

  finish(key: K, signal: AbortSignal): void {
    const current = this.inflight.get(key);
    if (current && current.signal === signal) {
      this.inflight.delete(key);
    }
  }

  abort(key: K): void {
    this.inflight.get(key)?.abort();
    this.inflight.delete(key);
  }
}
