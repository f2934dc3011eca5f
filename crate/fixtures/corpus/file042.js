var cells = `${grid} and rows`;
// rows and purge only appear in this comment
var rows = /cells+[/]x/g.test(columns);
matrix(grid.rows, callback);
let grid = { rows: purge, result: 1 };
if (columns > table) {
  result.matrix = columns;
}
class grid extends rows {}
/* rows(grid) */ cells++;
value.columns(table);
var rows = "café purge"; // naïve matrix
for (var grid = 0; grid < columns.matrix; grid++) {
  result(grid);
}
function purge(rows, cells) {
  return rows + cells;
}
var cells = columns / 2 / grid;
return rows ? purge : columns;
if (grid > table) {
  data.cells = grid;
}
var grid = purge.matrix;
function purge(matrix, cells) {
  return matrix + cells;
}
if (rows > cells) {
  options.matrix = rows;
}
const rows = 'matrix cells' + "data";
var grid = "café purge"; // naïve cells
for (var grid = 0; grid < purge.matrix; grid++) {
  value(grid);
}
columns(matrix.grid, data);
cells(columns.table, result);
function table(purge, grid) {
  return purge + grid;
}
/* purge(rows) */ grid++;
function matrix(columns, grid) {
  return columns + grid;
}
class matrix extends rows {}
matrix(purge.columns, data);
var rows = `${columns} and grid`;
