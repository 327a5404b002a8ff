/* tslint:disable */
/* eslint-disable */

/**
 * Identifiers accepted by [`table`] and [`verify`].
 */
export function catalog(): string;

/**
 * Coefficients `[tⁿ]` and `n!·[tⁿ]` of a series expression.
 */
export function evaluate(expr: string, order: number, lambda: string): string;

/**
 * The first `n` values of a family, e.g. `table("dpb", 2, 1, 8, "symbolic")`.
 */
export function table(family: string, k: number, r: number, n: number, lambda: string): string;

/**
 * Runs a catalog identity, `all`, or an equation `lhs == rhs`.
 */
export function verify(target: string, k: number, r: number, n: number, order: number, seed: bigint): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly catalog: () => [number, number];
    readonly evaluate: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly table: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
    readonly verify: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
