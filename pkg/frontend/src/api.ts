// Typed client for the listening-test HTTP API. The server never includes
// condition ids for rated stimuli in these payloads; keep it that way here.

export interface StimulusRef {
  handle: string;
  audio_url: string;
}

export interface ScaleInfo {
  kind: "mos" | "mushra";
  minimum: number;
  maximum: number;
}

export interface PagePayload {
  done: boolean;
  page_id?: string | null;
  page_type?: "mos" | "mushra" | null;
  page_index?: number | null;
  page_count?: number | null;
  scale?: ScaleInfo | null;
  stimulus?: StimulusRef | null;
  reference?: StimulusRef | null;
  stimuli?: StimulusRef[] | null;
}

export interface SessionInfo {
  session_id: string;
  listener_id: string;
  test_id: string;
  page_count: number;
  instructions: string;
}

export type RatingBody = { value: number } | { values: Record<string, number> };

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  if (!response.ok) {
    throw new ApiError(response.status, await response.text());
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  startSession(testId: string, listenerName: string): Promise<SessionInfo> {
    return request<SessionInfo>(`${this.baseUrl}/tests/${encodeURIComponent(testId)}/sessions`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ listener_name: listenerName }),
    });
  }

  nextPage(sessionId: string): Promise<PagePayload> {
    return request<PagePayload>(`${this.baseUrl}/sessions/${sessionId}/next`);
  }

  submitRating(sessionId: string, pageId: string, body: RatingBody): Promise<unknown> {
    return request(`${this.baseUrl}/sessions/${sessionId}/pages/${pageId}/ratings`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  audioUrl(ref: { audio_url: string }): string {
    return `${this.baseUrl}${ref.audio_url}`;
  }
}
