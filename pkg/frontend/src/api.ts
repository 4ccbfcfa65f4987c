// Typed client for the compile service.

export interface CompileRequestBody {
  source: string;
  language: string;
  structure: string;
  format: string[];
  title?: string;
  description?: string;
}

export interface TabularOut {
  html: string;
  csv: string;
  column_names: string[];
}

export interface NavigableOut {
  html: string;
  nav_model: string;
}

export interface TactileOut {
  svg: string;
  page: { width_mm: number; height_mm: number };
  legend: { braille: string; print: string }[];
}

export interface OutputBundle {
  ir_json: string;
  description: string;
  tabular: TabularOut | null;
  navigable: NavigableOut | null;
  tactile: TactileOut | null;
}

export interface CompileError {
  code: string;
  message: string;
  line: number | null;
  column: number | null;
}

export type CompileResult =
  | { ok: true; bundle: OutputBundle }
  | { ok: false; error: CompileError };

// Network failures reject; HTTP-level compile failures resolve as {ok: false}.
export async function compile(
  body: CompileRequestBody,
  options: { fetcher?: typeof fetch; signal?: AbortSignal; baseUrl?: string } = {},
): Promise<CompileResult> {
  const fetcher = options.fetcher ?? fetch;
  const response = await fetcher(`${options.baseUrl ?? ""}/api/compile`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
    signal: options.signal ?? null,
  });
  const payload = await response.json();
  if (response.ok) {
    return { ok: true, bundle: payload as OutputBundle };
  }
  return { ok: false, error: payload as CompileError };
}
