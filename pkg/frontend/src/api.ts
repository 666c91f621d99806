/** Typed client for the JSON API described in docs/api.md. */

export interface ModeOption {
  id: string;
  label: string;
}

export interface HealthResponse {
  status: string;
  projects: string[];
  blind: boolean;
  modes: ModeOption[];
}

export interface RankedResult {
  rank: number;
  project: string;
  bug_id: number;
  comment_id: number;
  final_score: number;
  vsm_score: number;
  sa_boost: number;
  tr_boost: number;
  snippet: string;
}

export interface QueryResponse {
  results: RankedResult[];
  no_match: boolean;
  elapsed_ms: number;
}

export interface RatingRef {
  project: string;
  bug_id: number;
  comment_id: number;
}

export interface RatingIn {
  rater_id: string;
  query_text: string;
  ref: RatingRef;
  score: number;
}

export interface RatingRecord extends RatingIn {
  rated_at: number;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    const body = await response.text();
    throw new ApiError(`request failed with ${response.status}: ${body}`, response.status);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  health(): Promise<HealthResponse> {
    return this.get<HealthResponse>("/api/health");
  }

  query(project: string, queryText: string, mode: string, topK = 10): Promise<QueryResponse> {
    return this.post<QueryResponse>("/api/query", {
      project,
      query_text: queryText,
      mode,
      top_k: topK,
    });
  }

  rate(rating: RatingIn): Promise<void> {
    return this.post<unknown>("/api/ratings", rating).then(() => undefined);
  }

  exportRatings(): Promise<RatingRecord[]> {
    return this.get<RatingRecord[]>("/api/ratings/export");
  }

  private get<T>(path: string): Promise<T> {
    return this.fetchFn(this.baseUrl + path).then((r) => asJson<T>(r));
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    }).then((r) => asJson<T>(r));
  }
}
