// Wire types mirroring the service's JSON documents.

export type Vec3 = [number, number, number];
export type Vec4 = [number, number, number, number];

export interface FitCircle {
  kind: "circle";
  center: Vec3;
  radius: number;
  normal: Vec3;
}

export interface FitLine {
  kind: "line";
  point: Vec3;
  direction: Vec3;
}

export type Fit = FitCircle | FitLine;

export interface FiberDocument {
  schema_version: string;
  base_point: Vec3;
  gauge_kind: string;
  gauge: Vec4;
  samples: number;
  points_s3: Vec4[];
  /** null when the fiber passes through the projection pole (line fiber) */
  projected: Vec3[] | null;
  fit: Fit;
}

export interface LinkReportDocument {
  base: Vec3;
  a: Vec3;
  b: Vec3;
  dist_inside: number;
  dist_outside: number;
  line_direction: Vec3;
  gauss: number;
  linked: boolean;
}

export interface PairLinkReportDocument {
  base_a: Vec3;
  base_b: Vec3;
  /** null for antipodal pairs, whose transported second fiber is a line */
  transformed_report: LinkReportDocument | null;
  gauss_direct: number;
  linked: boolean;
}

export interface ApiErrorBody {
  code: "pole" | "domain" | "parse" | "proximity";
  message: string;
  detail?: Record<string, unknown>;
}
