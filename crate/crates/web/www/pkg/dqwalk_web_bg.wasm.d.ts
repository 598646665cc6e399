/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const classicalDistribution: (a: number, b: number) => [number, number, number, number];
export const distributionGrid: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const distributionStats: (a: number, b: number) => [number, number, number, number];
export const intervalBounds: (a: number, b: number) => [number, number, number, number];
export const quantumDistribution: (a: number, b: number, c: number) => [number, number, number, number];
export const randomPairingDistribution: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const speedCurve: (a: number, b: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
