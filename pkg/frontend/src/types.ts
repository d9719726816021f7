// Payload shapes of the search service's JSON API.

export interface ApiSearchResult {
  id: number;
  name: string;
  lld: number;
  bd: number;
  span: [number, number];
}

export interface ApiSearchResponse {
  query: string;
  results: ApiSearchResult[];
  corpus_size: number;
  latency_us: number;
}

export interface ServiceParams {
  k: number;
  lambda: number;
  t1: number;
  t2: number;
  min_fuzzy_len: number;
  limit: number;
}

export const DEFAULT_PARAMS: ServiceParams = {
  k: 1,
  lambda: 1,
  t1: 1,
  t2: 1,
  min_fuzzy_len: 3,
  limit: 20,
};
