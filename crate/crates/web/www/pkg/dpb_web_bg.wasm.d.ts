/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const catalog: () => [number, number];
export const evaluate: (a: number, b: number, c: number, d: number, e: number) => [number, number];
export const table: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
export const verify: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
